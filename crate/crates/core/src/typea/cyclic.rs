//! Cyclically decreasing elements of affine `A_{n-1}` and the symmetric
//! functions counting factorizations into them.

use std::collections::HashMap;

use crate::affweyl::{AffineWeylElement, AffineWeylGroup};

use super::symfunc::{partitions, SymBasis, SymFunc};

/// The affine Weyl group of type `A_{n-1}`, node `i` acting as `s_i`.
pub fn affine_group(n: usize) -> crate::error::Result<AffineWeylGroup> {
    if n < 2 {
        return Err(crate::error::Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    AffineWeylGroup::of_type("A", n - 1)
}

/// Word of the cyclically decreasing element with letter set `subset`, a
/// proper subset of `Z/n`: each maximal cyclic run `i, i+1, ..., i+k` is
/// written decreasingly; distinct runs commute.
pub fn cyclically_decreasing_word(subset: &[usize], n: usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &i in subset {
        inside[i % n] = true;
    }
    let Some(gap) = (0..n).find(|&i| !inside[i]) else {
        panic!("cyclically decreasing subsets are proper");
    };
    let mut word = Vec::new();
    let mut run = Vec::new();
    for step in 1..=n {
        let i = (gap + step) % n;
        if inside[i] {
            run.push(i);
        } else {
            word.extend(run.drain(..).rev());
        }
    }
    word
}

/// Whether a word is cyclically decreasing: distinct letters, and `i+1`
/// precedes `i` whenever both occur.
pub fn is_cyclically_decreasing(word: &[usize], n: usize) -> bool {
    let mut pos = vec![None; n];
    for (k, &a) in word.iter().enumerate() {
        if a >= n || pos[a].is_some() {
            return false;
        }
        pos[a] = Some(k);
    }
    if word.len() >= n {
        return false;
    }
    (0..n).all(|i| match (pos[i], pos[(i + 1) % n]) {
        (Some(p), Some(q)) => q < p,
        _ => true,
    })
}

/// Cyclically decreasing elements grouped by length (index `k` holds length `k`).
pub fn cyclically_decreasing_elements(g: &AffineWeylGroup, n: usize) -> Vec<Vec<AffineWeylElement>> {
    let mut out = vec![Vec::new(); n];
    for mask in 0u32..(1 << n) - 1 {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let word = cyclically_decreasing_word(&subset, n);
        out[subset.len()].push(g.from_word(&word).expect("valid nodes"));
    }
    out
}

/// Number of factorizations `w = v_1 v_2 ... v_k` with `l(v_i) = parts[i]`
/// (plain products that are length-additive, or Demazure products).
fn count(
    g: &AffineWeylGroup,
    cd: &[Vec<AffineWeylElement>],
    w: &AffineWeylElement,
    parts: &[u32],
    hecke: bool,
) -> i64 {
    let mut states: HashMap<AffineWeylElement, i64> = HashMap::from([(g.identity(), 1)]);
    for &p in parts {
        let mut next: HashMap<AffineWeylElement, i64> = HashMap::new();
        for (x, &c) in &states {
            let lx = g.length(x);
            for v in &cd[p as usize] {
                let y = if hecke {
                    g.demazure(x, v)
                } else {
                    let y = g.mul(x, v);
                    if g.length(&y) != lx + p as usize {
                        continue;
                    }
                    y
                };
                if g.bruhat_leq(&y, w) {
                    *next.entry(y).or_insert(0) += c;
                }
            }
        }
        states = next;
    }
    states.get(w).copied().unwrap_or(0)
}

/// Monomial coefficients of the affine Stanley symmetric function of `w`.
pub fn affine_stanley_in(g: &AffineWeylGroup, n: usize, w: &AffineWeylElement, degree: u32) -> SymFunc {
    let cd = cyclically_decreasing_elements(g, n);
    let lw = g.length(w) as u32;
    let mut out = SymFunc::zero(SymBasis::Monomial, degree);
    for lambda in partitions(lw) {
        if lambda.first().is_some_and(|&a| a as usize >= n) {
            continue;
        }
        let c = count(g, &cd, w, &lambda, false);
        out.add_term(lambda, c);
    }
    out
}

/// Monomial coefficients of the affine stable Grothendieck function of `w`,
/// through `degree`.
pub fn affine_stable_grothendieck_in(g: &AffineWeylGroup, n: usize, w: &AffineWeylElement, degree: u32) -> SymFunc {
    let cd = cyclically_decreasing_elements(g, n);
    let lw = g.length(w) as u32;
    let mut out = SymFunc::zero(SymBasis::Monomial, degree);
    for d in lw..=degree {
        let sign = if (d - lw).is_multiple_of(2) { 1 } else { -1 };
        for lambda in partitions(d) {
            if lambda.first().is_some_and(|&a| a as usize >= n) {
                continue;
            }
            let c = count(g, &cd, w, &lambda, true);
            out.add_term(lambda, sign * c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_cyclically_decreasing() {
        for n in 2..6 {
            for mask in 0u32..(1 << n) - 1 {
                let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let w = cyclically_decreasing_word(&subset, n);
                assert!(is_cyclically_decreasing(&w, n), "{w:?}");
            }
        }
        assert_eq!(cyclically_decreasing_word(&[1, 2], 3), vec![2, 1]);
        assert_eq!(cyclically_decreasing_word(&[0, 2], 3), vec![0, 2]);
        assert!(!is_cyclically_decreasing(&[1, 2], 3));
    }

    #[test]
    fn elements_are_distinct_and_reduced() {
        let n = 4;
        let g = affine_group(n).unwrap();
        let cd = cyclically_decreasing_elements(&g, n);
        let mut seen = std::collections::HashSet::new();
        for (k, level) in cd.iter().enumerate() {
            for v in level {
                assert_eq!(g.length(v), k);
                assert!(seen.insert(v.clone()));
            }
        }
        assert_eq!(seen.len(), 15);
    }
}
