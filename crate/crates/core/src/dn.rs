//! Normal form for the distinguished coset representatives of the maximal
//! parabolic `W_{R∖{r_n}}` in type `D_n`.
//!
//! Every non-identity representative `x` factors reduced as `x = a·b` where
//! either `a ∈ {[n], [n,n−2,n−1]}` and `b` lies in `W_{1..n−2}`, or
//! `a = [n,n−2,n−3,n−1,n−2,n]`.

use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::finite::{Element, FiniteGroup, Side};
use crate::spec::GroupSpec;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DnCase {
    /// `a = [n]`, `b ∈ W_{1..n−2}`.
    Single,
    /// `a = [n,n−2,n−1]`, `b ∈ W_{1..n−2}`.
    Triple,
    /// `a = [n,n−2,n−3,n−1,n−2,n]`, `b` arbitrary.
    Long,
}

#[derive(Debug, Clone, Serialize)]
pub struct DnFactorization {
    pub case: DnCase,
    pub a: Word,
    pub b: Word,
}

fn rank_of(group: &FiniteGroup) -> Result<usize> {
    match group.spec() {
        GroupSpec::D(n) => Ok(*n),
        other => Err(Error::Unsupported(format!("coset normal form is for type D, got {other}"))),
    }
}

/// The coset representatives being classified: right representatives of
/// `W_{R∖{r_n}}`, identity excluded.
pub fn dn_coset_representatives(group: &FiniteGroup) -> Result<Vec<Element>> {
    let n = rank_of(group)?;
    let j: Vec<usize> = (1..n).collect();
    Ok(group.coset_representatives(&j, Side::Right)?.into_iter().filter(|x| !group.is_identity(x)).collect())
}

/// Finds the factorization of `x`, checking the short cases first.
pub fn classify_dn_coset_rep(group: &FiniteGroup, x: &Element) -> Result<DnFactorization> {
    let n = rank_of(group)?;
    let descents = group.left_descents(x);
    if group.is_identity(x) || descents.iter().any(|&d| d != n) {
        return Err(Error::NotCosetRepresentative(group.reduced_word(x).to_string()));
    }
    let candidates = [
        (DnCase::Single, Word::new(vec![n]), true),
        (DnCase::Triple, Word::new(vec![n, n - 2, n - 1]), true),
        (DnCase::Long, Word::new(vec![n, n - 2, n - 3, n - 1, n - 2, n]), false),
    ];
    let lx = group.length(x);
    for (case, a, confined) in candidates {
        if a.len() > lx {
            continue;
        }
        let ae = group.element_from_word(&a)?;
        let b = group.mul(&group.inverse(&ae), x);
        if group.length(&b) != lx - a.len() {
            continue;
        }
        if confined && group.support(&b).iter().any(|&l| l > n - 2) {
            continue;
        }
        return Ok(DnFactorization { case, a, b: group.reduced_word(&b) });
    }
    Err(Error::Unclassified(group.reduced_word(x).to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_classification() {
        let g = FiniteGroup::from_label("D4").unwrap();
        let reps = dn_coset_representatives(&g).unwrap();
        assert_eq!(reps.len(), 7);
        let mut long = 0;
        for x in &reps {
            let f = classify_dn_coset_rep(&g, x).unwrap();
            let rebuilt = g.element_from_word(&f.a.concat(&f.b)).unwrap();
            assert_eq!(&rebuilt, x);
            if f.case == DnCase::Long {
                long += 1;
                assert_eq!(g.reduced_word(x), Word::new(vec![4, 2, 1, 3, 2, 4]));
            }
        }
        assert_eq!(long, 1);
    }

    #[test]
    fn rejects_non_representatives() {
        let g = FiniteGroup::from_label("D5").unwrap();
        let r1 = g.generator(1).unwrap();
        assert!(matches!(classify_dn_coset_rep(&g, &r1), Err(Error::NotCosetRepresentative(_))));
        assert!(classify_dn_coset_rep(&g, &g.identity()).is_err());
        let a3 = FiniteGroup::from_label("A3").unwrap();
        assert!(matches!(classify_dn_coset_rep(&a3, &a3.generator(3).unwrap()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn d6_all_classify() {
        let g = FiniteGroup::from_label("D6").unwrap();
        let reps = dn_coset_representatives(&g).unwrap();
        // |W(D6)| / |W(A5)| = 23040 / 720
        assert_eq!(reps.len() + 1, 32);
        for x in &reps {
            classify_dn_coset_rep(&g, x).unwrap();
        }
    }
}
