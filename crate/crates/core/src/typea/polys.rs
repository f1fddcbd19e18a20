//! Schubert polynomials (compatible sequences) and Grothendieck polynomials
//! (pipe dreams) for `S_n`, seen as the finite part of affine `A_{n-1}`.

use std::collections::BTreeSet;

use crate::affweyl::{AffineWeylElement, AffineWeylGroup};
use crate::error::{Error, Result};

use super::xpoly::XPoly;

fn check_finite(g: &AffineWeylGroup, v: &AffineWeylElement) -> Result<()> {
    if !g.is_finite(v) {
        return Err(Error::Invalid(format!("{} is not in the finite Weyl group", g.display(v))));
    }
    Ok(())
}

/// Every reduced word of `x`.
pub fn reduced_words(g: &AffineWeylGroup, x: &AffineWeylElement) -> Vec<Vec<usize>> {
    if g.is_identity(x) {
        return vec![Vec::new()];
    }
    let mut out = BTreeSet::new();
    for i in g.left_descents(x) {
        for mut rest in reduced_words(g, &g.mul_simple_left(i, x)) {
            rest.insert(0, i);
            out.insert(rest);
        }
    }
    out.into_iter().collect()
}

/// Sum over reduced words `a` of `v` and sequences `i_1 <= ... <= i_l` with
/// `i_j <= a_j` and `i_j < i_{j+1}` whenever `a_j < a_{j+1}`.
pub fn schubert_poly_in(g: &AffineWeylGroup, n: usize, v: &AffineWeylElement) -> Result<XPoly> {
    check_finite(g, v)?;
    let vars = n - 1;
    let mut out = XPoly::zero(vars);
    fn go(a: &[usize], j: usize, prev: usize, exp: &mut Vec<u32>, out: &mut XPoly) {
        if j == a.len() {
            out.add_term(exp.clone(), 1);
            return;
        }
        let lo = if j > 0 && a[j - 1] < a[j] { prev + 1 } else { prev.max(1) };
        for i in lo..=a[j] {
            exp[i - 1] += 1;
            go(a, j + 1, i, exp, out);
            exp[i - 1] -= 1;
        }
    }
    for a in reduced_words(g, v) {
        go(&a, 0, 1, &mut vec![0; vars], &mut out);
    }
    Ok(out)
}

/// Sum over subsets `P` of the staircase `{(r, c) : r + c <= n}` whose word
/// (rows top to bottom, each row right to left, cell `(r, c)` giving
/// `s_{r+c-1}`) has Demazure product `v`, of `(-1)^{|P| - l(v)} prod x_r`.
pub fn grothendieck_poly_in(g: &AffineWeylGroup, n: usize, v: &AffineWeylElement) -> Result<XPoly> {
    check_finite(g, v)?;
    let vars = n - 1;
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|r| (1..=n - r).rev().map(move |c| (r, c)))
        .collect();
    if cells.len() > 24 {
        return Err(Error::Budget(format!("pipe dreams for n = {n}")));
    }
    let lv = g.length(v) as i64;
    let mut out = XPoly::zero(vars);
    for mask in 0u32..(1u32 << cells.len()) {
        if (mask.count_ones() as i64) < lv {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..cells.len()).filter(|k| mask & (1 << k) != 0).map(|k| cells[k]).collect();
        let word: Vec<usize> = chosen.iter().map(|&(r, c)| r + c - 1).collect();
        if &g.demazure_word(&word) != v {
            continue;
        }
        let mut exp = vec![0u32; vars];
        for &(r, _) in &chosen {
            exp[r - 1] += 1;
        }
        let sign = if (chosen.len() as i64 - lv) % 2 == 0 { 1 } else { -1 };
        out.add_term(exp, sign);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_three() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        let w = |word: &[usize]| g.from_word(word).unwrap();
        let s = |word: &[usize]| schubert_poly_in(&g, 3, &w(word)).unwrap().to_string();
        let k = |word: &[usize]| grothendieck_poly_in(&g, 3, &w(word)).unwrap().to_string();
        assert_eq!(s(&[]), "1");
        assert_eq!(s(&[1]), "x1");
        assert_eq!(s(&[2]), "x1 + x2");
        assert_eq!(s(&[2, 1]), "x1^2");
        assert_eq!(s(&[1, 2]), "x1*x2");
        assert_eq!(s(&[1, 2, 1]), "x1^2*x2");
        assert_eq!(k(&[1]), "x1");
        assert_eq!(k(&[2]), "x1 + x2 - x1*x2");
        assert_eq!(k(&[2, 1]), "x1^2");
    }

    #[test]
    fn affine_elements_are_rejected() {
        let g = AffineWeylGroup::of_type("A", 2).unwrap();
        assert!(schubert_poly_in(&g, 3, &g.simple(0)).is_err());
        assert!(grothendieck_poly_in(&g, 3, &g.simple(0)).is_err());
    }
}
