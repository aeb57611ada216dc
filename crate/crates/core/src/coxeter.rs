//! Word algorithms shared by every realization of a Coxeter group.

use crate::error::Result;
use crate::word::Word;

/// A Coxeter group realized concretely enough to multiply by generators and
/// to test right descents.
///
/// `s` arguments are 0-based generator indices; words use 1-based labels.
pub trait CoxeterSystem {
    type Elem: Clone + PartialEq;

    fn rank(&self) -> usize;

    fn identity(&self) -> Self::Elem;

    /// `w · r_s`.
    fn mul_generator(&self, w: &Self::Elem, s: usize) -> Self::Elem;

    /// Whether `ℓ(w r_s) < ℓ(w)`, i.e. `w · α_s` is negative.
    fn is_right_descent(&self, w: &Self::Elem, s: usize) -> bool;

    /// Composes the generators of `word` left to right.
    fn element_from_word(&self, word: &Word) -> Result<Self::Elem> {
        word.check_rank(self.rank())?;
        Ok(word.letters().iter().fold(self.identity(), |w, &l| self.mul_generator(&w, l - 1)))
    }

    /// Reducedness, tested one letter at a time: appending `s` to the prefix
    /// `p` increases length iff `p · α_s` is positive.
    fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(first_descent(self, word)?.is_none())
    }

    /// A reduced word for the same element, obtained by deleting the pairs of
    /// letters supplied by the exchange condition, leftmost pair first.
    fn reduce_word(&self, word: &Word) -> Result<Word> {
        let mut letters = word.letters().to_vec();
        while let Some(k) = first_descent(self, &Word::new(letters.clone()))? {
            let target = self.element_from_word(&Word::new(letters[..=k].to_vec()))?;
            let i = (0..k)
                .find(|&i| {
                    let mut shorter = letters[..k].to_vec();
                    shorter.remove(i);
                    self.element_from_word(&Word::new(shorter)).ok().as_ref() == Some(&target)
                })
                .expect("exchange condition supplies a deletable letter");
            letters.remove(k);
            letters.remove(i);
        }
        Ok(Word::new(letters))
    }
}

/// Position of the first letter that shortens its prefix.
fn first_descent<G: CoxeterSystem + ?Sized>(group: &G, word: &Word) -> Result<Option<usize>> {
    word.check_rank(group.rank())?;
    let mut prefix = group.identity();
    for (k, &l) in word.letters().iter().enumerate() {
        if group.is_right_descent(&prefix, l - 1) {
            return Ok(Some(k));
        }
        prefix = group.mul_generator(&prefix, l - 1);
    }
    Ok(None)
}
