//! Finite root systems built from Cartan data, and their Weyl groups.
//!
//! Conventions: `cartan[i][j] = <alpha_i^vee, alpha_j>`. Weights are stored in
//! fundamental-weight coordinates, so `<alpha_i^vee, lambda>` is the `i`-th
//! coordinate and the simple root `alpha_j` is column `j` of the Cartan matrix.
//! Coroot-lattice vectors are stored in simple-coroot coordinates.
//!
//! Simple reflections are numbered by Dynkin node `1..=rank`; node `0` is
//! reserved for the affine node and handled in [`crate::affweyl`].

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Small integer vector used for weights, roots and coroots.
pub type Vector = SmallVec<[i32; 4]>;

/// Default cap on the number of finite Weyl group elements.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub coords: Vector,
    /// Coroot in the simple-coroot basis.
    pub coroot: Vector,
    /// The same root in fundamental-weight coordinates.
    pub weight: Vector,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

/// Cartan data loadable from JSON: `{"cartan": [[...]], "labels": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CartanDocument {
    pub cartan: Vec<Vec<i32>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
    highest_root: usize,
    comarks: Vec<i32>,
}

impl RootSystem {
    /// Builds the root system of a classical type (`A`-`D`) or `G2`.
    pub fn of_type(letter: &str, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(letter, rank)?;
        let label = format!("{}{}", letter.to_ascii_uppercase(), rank);
        Self::from_cartan_labeled(cartan, label)
    }

    pub fn from_cartan(cartan: Vec<Vec<i32>>) -> Result<Self> {
        Self::from_cartan_labeled(cartan, "custom".to_string())
    }

    pub fn from_document(doc: &CartanDocument) -> Result<Self> {
        let label = if doc.labels.is_empty() {
            "custom".to_string()
        } else {
            doc.labels.join(",")
        };
        Self::from_cartan_labeled(doc.cartan.clone(), label)
    }

    fn from_cartan_labeled(cartan: Vec<Vec<i32>>, label: String) -> Result<Self> {
        validate_cartan(&cartan)?;
        let rank = cartan.len();
        let positive_roots = positive_roots(&cartan, 10_000)?;

        let max_height = positive_roots.iter().map(Root::height).max().unwrap_or(0);
        let tops: Vec<usize> = (0..positive_roots.len())
            .filter(|&k| positive_roots[k].height() == max_height)
            .collect();
        if tops.len() != 1 {
            return Err(Error::InvalidCartan(
                "root system is not irreducible: no unique highest root".into(),
            ));
        }
        let highest_root = tops[0];
        let theta = &positive_roots[highest_root];
        // theta must dominate every positive root
        for beta in &positive_roots {
            if theta.coords.iter().zip(&beta.coords).any(|(t, b)| t < b) {
                return Err(Error::InvalidCartan("highest root is not maximal".into()));
            }
        }
        let mut comarks = Vec::with_capacity(rank + 1);
        comarks.push(1);
        comarks.extend(theta.coroot.iter().copied());

        Ok(RootSystem {
            label,
            cartan,
            positive_roots,
            highest_root,
            comarks,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    /// Level of `Lambda_i` for every affine node `i = 0..=rank`.
    pub fn comarks(&self) -> &[i32] {
        &self.comarks
    }

    /// Simple root `alpha_i` (node `1..=rank`) in weight coordinates.
    pub fn simple_root_weight(&self, node: usize) -> Vector {
        let j = node - 1;
        self.cartan.iter().map(|row| row[j]).collect()
    }

    /// Converts root coordinates into weight coordinates.
    pub fn root_to_weight(&self, coords: &[i32]) -> Vector {
        (0..self.rank())
            .map(|i| {
                self.cartan[i]
                    .iter()
                    .zip(coords)
                    .map(|(a, c)| a * c)
                    .sum()
            })
            .collect()
    }

    /// `s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i` for node `1..=rank`.
    pub fn reflect_weight(&self, node: usize, weight: &[i32]) -> Vector {
        let i = node - 1;
        let n = weight[i];
        weight
            .iter()
            .enumerate()
            .map(|(j, &w)| w - n * self.cartan[j][i])
            .collect()
    }

    /// Reflects `weight` by the letters of `word` in reading order: the first
    /// letter is applied first. For the action of the group element
    /// `s_{i_1} ... s_{i_k}` pass the reversed word, or use
    /// [`FiniteWeylGroup::act_weight`].
    pub fn weyl_act_word(&self, word: &[usize], weight: &[i32]) -> Result<Vector> {
        let mut out: Vector = weight.iter().copied().collect();
        if weight.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: weight.len(),
            });
        }
        for &node in word {
            if node == 0 || node > self.rank() {
                return Err(Error::IndexOutOfRange(node));
            }
            out = self.reflect_weight(node, &out);
        }
        Ok(out)
    }

    /// Pairing `<mu, lambda>` of a coroot-lattice vector with a weight.
    pub fn pair(mu: &[i32], weight: &[i32]) -> i32 {
        mu.iter().zip(weight).map(|(a, b)| a * b).sum()
    }
}

fn cartan_matrix(letter: &str, rank: usize) -> Result<Vec<Vec<i32>>> {
    let letter = letter.to_ascii_uppercase();
    let bad = || Error::InvalidType(format!("{letter}{rank}"));
    let chain = |n: usize| {
        let mut a = vec![vec![0; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let a = match letter.as_str() {
        "A" if rank >= 1 => chain(rank),
        "B" if rank >= 2 => {
            let mut a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            a
        }
        "C" if rank >= 2 => {
            let mut a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            a
        }
        "D" if rank >= 4 => {
            let mut a = chain(rank);
            a[rank - 1][rank - 2] = 0;
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 3] = -1;
            a[rank - 3][rank - 1] = -1;
            a
        }
        // alpha_1 short, alpha_2 long
        "G" if rank == 2 => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(bad()),
    };
    Ok(a)
}

fn validate_cartan(a: &[Vec<i32>]) -> Result<()> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
        }
        for j in 0..n {
            if i != j {
                if row[j] > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) is positive")));
                }
                if (row[j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Orbit closure of the simple roots under simple reflections, keeping positives.
fn positive_roots(a: &[Vec<i32>], cap: usize) -> Result<Vec<Root>> {
    let n = a.len();
    let weight_of = |coords: &[i32]| -> Vector {
        (0..n)
            .map(|i| a[i].iter().zip(coords).map(|(x, c)| x * c).sum())
            .collect()
    };
    let mut roots: Vec<Root> = Vec::new();
    let mut seen: HashMap<Vector, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut coords: Vector = smallvec::smallvec![0; n];
        coords[i] = 1;
        let coroot = coords.clone();
        let weight = weight_of(&coords);
        seen.insert(coords.clone(), roots.len());
        queue.push_back(roots.len());
        roots.push(Root {
            coords,
            coroot,
            weight,
        });
    }
    while let Some(k) = queue.pop_front() {
        for i in 0..n {
            let beta = &roots[k];
            if beta.coords.iter().enumerate().all(|(j, &c)| c == (j == i) as i32) {
                continue;
            }
            // <alpha_i^vee, beta> and <beta^vee, alpha_i>
            let pairing = beta.weight[i];
            let co_pairing: i32 = (0..n).map(|j| beta.coroot[j] * a[j][i]).sum();
            let mut coords = beta.coords.clone();
            coords[i] -= pairing;
            let mut coroot = beta.coroot.clone();
            coroot[i] -= co_pairing;
            if seen.contains_key(&coords) {
                continue;
            }
            if roots.len() >= cap {
                return Err(Error::Budget(format!(
                    "more than {cap} positive roots; Cartan matrix is not of finite type"
                )));
            }
            let weight = weight_of(&coords);
            seen.insert(coords.clone(), roots.len());
            queue.push_back(roots.len());
            roots.push(Root {
                coords,
                coroot,
                weight,
            });
        }
    }
    roots.sort_by(|x, y| {
        x.height()
            .cmp(&y.height())
            .then_with(|| y.coords.cmp(&x.coords))
    });
    Ok(roots)
}

/// Index of an element of a finite Weyl group.
///
/// Elements are canonicalized by their matrix on weight coordinates; the index
/// is a label of that matrix inside its [`FiniteWeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteWeylElement(pub u32);

impl FiniteWeylElement {
    pub const IDENTITY: FiniteWeylElement = FiniteWeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Enumerated finite Weyl group with multiplication and action tables.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    rank: usize,
    matrices: Vec<Vec<i32>>,
    coroot_matrices: Vec<Vec<i32>>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    /// `root_perm[w][k]` is the index of `w(root_k)` among all roots.
    root_perm: Vec<Vec<u32>>,
    /// All roots: positives first (same order as the root system), then negatives.
    all_roots: Vec<Vector>,
    n_positive: usize,
    longest: u32,
}

impl FiniteWeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        Self::with_cap(rs, DEFAULT_WEYL_CAP)
    }

    pub fn with_cap(rs: &RootSystem, cap: usize) -> Result<Self> {
        let r = rs.rank();
        let a = rs.cartan();
        let ident: Vec<i32> = (0..r * r).map(|k| (k / r == k % r) as i32).collect();
        let gens: Vec<Vec<i32>> = (0..r)
            .map(|i| {
                let mut m = ident.clone();
                for j in 0..r {
                    m[j * r + i] -= a[j][i];
                }
                m
            })
            .collect();

        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        let mut matrices = vec![ident.clone()];
        let mut lengths = vec![0usize];
        index.insert(ident, 0);
        let mut frontier = vec![0u32];
        let mut right: Vec<Vec<u32>> = vec![vec![u32::MAX; r]];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                for i in 0..r {
                    let m = mat_mul(&matrices[w as usize], &gens[i], r);
                    let id = match index.get(&m) {
                        Some(&id) => id,
                        None => {
                            if matrices.len() >= cap {
                                return Err(Error::Budget(format!(
                                    "finite Weyl group exceeds {cap} elements"
                                )));
                            }
                            let id = matrices.len() as u32;
                            index.insert(m.clone(), id);
                            matrices.push(m);
                            lengths.push(lengths[w as usize] + 1);
                            right.push(vec![u32::MAX; r]);
                            next.push(id);
                            id
                        }
                    };
                    right[w as usize][i] = id;
                }
            }
            frontier = next;
        }
        let size = matrices.len();
        let mut left = vec![vec![0u32; r]; size];
        for w in 0..size {
            for i in 0..r {
                let m = mat_mul(&gens[i], &matrices[w], r);
                left[w][i] = index[&m];
            }
        }
        let mut inverse = vec![0u32; size];
        // lex-least reduced words via left descents
        let mut words = vec![Vec::new(); size];
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&w| lengths[w]);
        for &w in &order {
            if lengths[w] == 0 {
                continue;
            }
            let i = (0..r)
                .find(|&i| lengths[left[w][i] as usize] < lengths[w])
                .expect("nonidentity element has a left descent");
            let mut word = vec![i + 1];
            word.extend_from_slice(&words[left[w][i] as usize]);
            words[w] = word;
        }
        for w in 0..size {
            let mut x = 0u32;
            for &node in words[w].iter().rev() {
                x = left[x as usize][node - 1];
            }
            debug_assert_eq!(x as usize, w);
            // w^{-1} = reversed word
            let mut y = 0u32;
            for &node in &words[w] {
                y = left[y as usize][node - 1];
            }
            inverse[w] = y;
        }
        let coroot_matrices = (0..size)
            .map(|w| {
                let m = &matrices[inverse[w] as usize];
                (0..r * r).map(|k| m[(k % r) * r + k / r]).collect()
            })
            .collect();

        let mut all_roots: Vec<Vector> = rs.positive_roots().iter().map(|b| b.weight.clone()).collect();
        let n_positive = all_roots.len();
        let negatives: Vec<Vector> = all_roots
            .iter()
            .map(|v| v.iter().map(|x| -x).collect())
            .collect();
        all_roots.extend(negatives);
        let root_index: HashMap<Vector, u32> = all_roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k as u32))
            .collect();
        let root_perm = (0..size)
            .map(|w| {
                all_roots
                    .iter()
                    .map(|beta| root_index[&mat_vec(&matrices[w], beta, r)])
                    .collect()
            })
            .collect();
        let longest = (0..size).max_by_key(|&w| lengths[w]).unwrap_or(0) as u32;

        Ok(FiniteWeylGroup {
            rank: r,
            matrices,
            coroot_matrices,
            right,
            left,
            inverse,
            lengths,
            words,
            root_perm,
            all_roots,
            n_positive,
            longest,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.matrices.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = FiniteWeylElement> {
        (0..self.size() as u32).map(FiniteWeylElement)
    }

    /// Simple reflection for node `1..=rank`.
    pub fn simple(&self, node: usize) -> FiniteWeylElement {
        FiniteWeylElement(self.right[0][node - 1])
    }

    /// Row-major matrix of `w` acting on fundamental-weight coordinates.
    pub fn matrix(&self, w: FiniteWeylElement) -> &[i32] {
        &self.matrices[w.index()]
    }

    pub fn length(&self, w: FiniteWeylElement) -> usize {
        self.lengths[w.index()]
    }

    /// Lex-least reduced word (nodes `1..=rank`).
    pub fn word(&self, w: FiniteWeylElement) -> &[usize] {
        &self.words[w.index()]
    }

    pub fn longest(&self) -> FiniteWeylElement {
        FiniteWeylElement(self.longest)
    }

    pub fn inverse(&self, w: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.inverse[w.index()])
    }

    pub fn mul_simple_right(&self, w: FiniteWeylElement, node: usize) -> FiniteWeylElement {
        FiniteWeylElement(self.right[w.index()][node - 1])
    }

    pub fn mul_simple_left(&self, node: usize, w: FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement(self.left[w.index()][node - 1])
    }

    pub fn mul(&self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement {
        self.words[b.index()]
            .iter()
            .fold(a, |x, &node| self.mul_simple_right(x, node))
    }

    pub fn from_word(&self, word: &[usize]) -> Result<FiniteWeylElement> {
        let mut x = FiniteWeylElement::IDENTITY;
        for &node in word {
            if node == 0 || node > self.rank {
                return Err(Error::IndexOutOfRange(node));
            }
            x = self.mul_simple_right(x, node);
        }
        Ok(x)
    }

    pub fn act_weight(&self, w: FiniteWeylElement, weight: &[i32]) -> Vector {
        mat_vec(self.matrix(w), weight, self.rank)
    }

    pub fn act_coroot(&self, w: FiniteWeylElement, coroot: &[i32]) -> Vector {
        mat_vec(&self.coroot_matrices[w.index()], coroot, self.rank)
    }

    /// Number of roots (positive and negative).
    pub fn root_count(&self) -> usize {
        self.all_roots.len()
    }

    pub fn positive_root_count(&self) -> usize {
        self.n_positive
    }

    pub fn root_weight(&self, k: usize) -> &[i32] {
        &self.all_roots[k]
    }

    pub fn root_is_positive(&self, k: usize) -> bool {
        k < self.n_positive
    }

    /// Index of `-root_k`.
    pub fn negate_root(&self, k: usize) -> usize {
        if k < self.n_positive {
            k + self.n_positive
        } else {
            k - self.n_positive
        }
    }

    /// Index of `w(root_k)`.
    pub fn act_root(&self, w: FiniteWeylElement, k: usize) -> usize {
        self.root_perm[w.index()][k] as usize
    }

    /// Finds the group element whose weight matrix equals `m`.
    pub fn find_matrix(&self, m: &[i32]) -> Option<FiniteWeylElement> {
        self.matrices
            .iter()
            .position(|x| x.as_slice() == m)
            .map(|k| FiniteWeylElement(k as u32))
    }
}

pub(crate) fn mat_mul(a: &[i32], b: &[i32], r: usize) -> Vec<i32> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                c[i * r + j] += x * b[k * r + j];
            }
        }
    }
    c
}

pub(crate) fn mat_vec(m: &[i32], v: &[i32], r: usize) -> Vector {
    (0..r)
        .map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_data() {
        let rs = RootSystem::of_type("A", 1).unwrap();
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.highest_root().coords.as_slice(), &[1]);
        assert_eq!(rs.comarks(), &[1, 1]);
    }

    #[test]
    fn a2_data() {
        let rs = RootSystem::of_type("A", 2).unwrap();
        assert_eq!(rs.positive_roots().len(), 3);
        assert_eq!(rs.highest_root().coords.as_slice(), &[1, 1]);
        assert_eq!(rs.comarks(), &[1, 1, 1]);
    }

    #[test]
    fn g2_has_a_level_two_node() {
        let rs = RootSystem::of_type("G", 2).unwrap();
        assert_eq!(rs.positive_roots().len(), 6);
        // theta = 3 alpha_1 + 2 alpha_2, theta^vee = alpha_1^vee + 2 alpha_2^vee
        assert_eq!(rs.highest_root().coords.as_slice(), &[3, 2]);
        assert_eq!(rs.comarks(), &[1, 1, 2]);
    }

    #[test]
    fn root_counts_match_known_values() {
        for (t, r, n) in [
            ("A", 3, 6),
            ("A", 4, 10),
            ("B", 2, 4),
            ("B", 3, 9),
            ("C", 3, 9),
            ("D", 4, 12),
            ("C", 2, 4),
        ] {
            let rs = RootSystem::of_type(t, r).unwrap();
            assert_eq!(rs.positive_roots().len(), n, "{t}{r}");
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (t, r, n) in [("A", 2, 6), ("A", 3, 24), ("B", 3, 48), ("C", 2, 8), ("D", 4, 192), ("G", 2, 12)] {
            let rs = RootSystem::of_type(t, r).unwrap();
            let w = FiniteWeylGroup::new(&rs).unwrap();
            assert_eq!(w.size(), n, "{t}{r}");
            assert_eq!(w.length(w.longest()), rs.positive_roots().len());
        }
    }

    #[test]
    fn weyl_act_examples() {
        let a1 = RootSystem::of_type("A", 1).unwrap();
        // omega_1 - alpha_1 = -omega_1
        assert_eq!(a1.weyl_act_word(&[1], &[1]).unwrap().as_slice(), &[-1]);
        let a2 = RootSystem::of_type("A", 2).unwrap();
        let out = a2.weyl_act_word(&[1, 2], &[1, 0]).unwrap();
        // s1 applied first, then s2: omega_1 - alpha_1 - alpha_2
        let a1w = a2.simple_root_weight(1);
        let a2w = a2.simple_root_weight(2);
        let expected: Vec<i32> = (0..2).map(|k| [1, 0][k] - a1w[k] - a2w[k]).collect();
        assert_eq!(out.as_slice(), expected.as_slice());
        assert_eq!(a2.weyl_act_word(&[], &[3, -2]).unwrap().as_slice(), &[3, -2]);
        assert!(matches!(
            a2.weyl_act_word(&[3], &[1, 0]),
            Err(Error::IndexOutOfRange(3))
        ));
    }

    #[test]
    fn invalid_cartan_is_rejected() {
        assert!(RootSystem::from_cartan(vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(RootSystem::from_cartan(vec![vec![2, 0], vec![-1, 2]]).is_err());
        assert!(RootSystem::from_cartan(vec![vec![3]]).is_err());
        // affine A1 is not of finite type
        assert!(RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn braid_relations_on_weights() {
        for (t, r) in [("A", 3), ("B", 3), ("G", 2), ("D", 4)] {
            let rs = RootSystem::of_type(t, r).unwrap();
            let w = FiniteWeylGroup::new(&rs).unwrap();
            for i in 1..=r {
                for j in 1..=r {
                    if i == j {
                        continue;
                    }
                    let a = rs.cartan()[i - 1][j - 1] * rs.cartan()[j - 1][i - 1];
                    let m = match a {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => unreachable!(),
                    };
                    let lhs: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                    let rhs: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                    assert_eq!(w.from_word(&lhs).unwrap(), w.from_word(&rhs).unwrap());
                }
            }
        }
    }

    #[test]
    fn inversion_count_matches_length() {
        let rs = RootSystem::of_type("B", 3).unwrap();
        let w = FiniteWeylGroup::new(&rs).unwrap();
        for x in w.elements() {
            let inv = (0..w.positive_root_count())
                .filter(|&k| !w.root_is_positive(w.act_root(x, k)))
                .count();
            assert_eq!(inv, w.length(x));
            for node in 1..=3 {
                let y = w.mul_simple_right(x, node);
                assert_eq!(w.length(y).abs_diff(w.length(x)), 1);
            }
        }
    }

    #[test]
    fn rho_orbit_is_free() {
        let rs = RootSystem::of_type("C", 3).unwrap();
        let w = FiniteWeylGroup::new(&rs).unwrap();
        let rho = [1, 1, 1];
        let images: std::collections::HashSet<Vector> =
            w.elements().map(|x| w.act_weight(x, &rho)).collect();
        assert_eq!(images.len(), w.size());
    }

    #[test]
    fn highest_root_properties() {
        for (t, r) in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)] {
            let rs = RootSystem::of_type(t, r).unwrap();
            let theta = rs.highest_root();
            assert_eq!(RootSystem::pair(&theta.coroot, &theta.weight), 2);
            for beta in rs.positive_roots() {
                assert!(theta.coords.iter().zip(&beta.coords).all(|(a, b)| a >= b));
            }
        }
    }

    #[test]
    fn cartan_document_roundtrip() {
        let doc: CartanDocument =
            serde_json::from_str(r#"{"cartan": [[2,-1],[-1,2]], "labels": ["1","2"]}"#).unwrap();
        let rs = RootSystem::from_document(&doc).unwrap();
        assert_eq!(rs.positive_roots().len(), 3);
    }
}
