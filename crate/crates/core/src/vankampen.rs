//! Braid words, the Artin action on free groups and Zariski-van Kampen
//! presentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grouptheory::{FreeWord, GroupPresentation};
use crate::Error;

/// Word in the Artin generators: letter `i` is `sigma_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands.max(1)) {
            return Err(Error::InvalidInput(format!("braid letter {l} out of range for {strands} strands")));
        }
        let mut b = BraidWord { strands, letters: Vec::with_capacity(letters.len()) };
        for l in letters {
            b.push(l);
        }
        Ok(b)
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// `(sigma_1 ... sigma_{d-1})^d`.
    pub fn full_twist(strands: usize) -> Self {
        let one_turn: Vec<i32> = (1..strands as i32).collect();
        BraidWord { strands, letters: one_turn.repeat(strands) }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        let mut b = self.clone();
        for &l in &other.letters {
            b.push(l);
        }
        b
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// `perm[p]` is the final position of the strand starting at position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut who: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let p = l.unsigned_abs() as usize - 1;
            who.swap(p, p + 1);
        }
        let mut at = vec![0; self.strands];
        for (pos, &s) in who.iter().enumerate() {
            at[s] = pos;
        }
        at
    }

    /// Images of `x_1, ..., x_d` under the Artin action of this braid.
    pub fn action_images(&self) -> Vec<FreeWord> {
        let d = self.strands;
        let mut img: Vec<FreeWord> = (1..=d).map(FreeWord::generator).collect();
        // act(b1 b2) = act(b1) o act(b2): precompose with one letter at a time
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let (a, b) = (img[i - 1].clone(), img[i].clone());
            if l > 0 {
                img[i - 1] = a.mul(&b).mul(&a.inverse());
                img[i] = a;
            } else {
                img[i - 1] = b.clone();
                img[i] = b.inverse().mul(&a).mul(&b);
            }
        }
        img
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

/// Artin action: `sigma_i` sends `x_i` to `x_i x_{i+1} x_i^-1` and `x_{i+1}`
/// to `x_i`, fixing the other generators. It is a left action:
/// `artin_act(b1 b2, w) = artin_act(b1, artin_act(b2, w))`.
pub fn artin_act(b: &BraidWord, w: &FreeWord) -> FreeWord {
    w.substitute(&b.action_images())
}

/// The monodromy relators `x_k^-1 artin_act(b, x_k)`, cyclically reduced,
/// trivial ones and duplicates removed.
pub fn relators_from_lasso(b: &BraidWord) -> Vec<FreeWord> {
    let mut out: Vec<FreeWord> = Vec::new();
    for (k, img) in b.action_images().iter().enumerate() {
        let r = FreeWord::generator(k + 1).inverse().mul(img).cyclic_normal_form();
        if !r.is_empty() && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `x_1 x_2 ... x_d`, the product fixed by every Artin generator.
pub fn projective_relator(d: usize) -> FreeWord {
    FreeWord::new((1..=d as i32).collect())
}

/// Presentation of the affine complement: `x_1..x_d` with the relators of
/// every lasso.
pub fn affine_presentation(braids: &[BraidWord], d: usize) -> Result<GroupPresentation, Error> {
    let mut p = GroupPresentation::new(d, Vec::new());
    for b in braids {
        if b.strands() != d {
            return Err(Error::InvalidInput(format!("braid on {} strands, expected {d}", b.strands())));
        }
        for r in relators_from_lasso(b) {
            p.add_relator(r);
        }
    }
    Ok(p)
}

/// The affine presentation followed by the projective relator.
pub fn assemble_presentation(braids: &[BraidWord], d: usize) -> Result<GroupPresentation, Error> {
    let mut p = affine_presentation(braids, d)?;
    p.add_relator(projective_relator(d));
    Ok(p)
}

/// Signed number of letters exchanging two strands that both start at a
/// position in `strands` (0-based).
pub fn half_twists_within(b: &BraidWord, strands: &[usize]) -> i64 {
    let mut who: Vec<usize> = (0..b.strands()).collect();
    let mut count = 0;
    for &l in b.letters() {
        let p = l.unsigned_abs() as usize - 1;
        if strands.contains(&who[p]) && strands.contains(&who[p + 1]) {
            count += l.signum() as i64;
        }
        who.swap(p, p + 1);
    }
    count
}

/// Product of the lasso braids in list order.
pub fn composite_braid(braids: &[BraidWord], d: usize) -> BraidWord {
    braids.iter().fold(BraidWord::identity(d), |acc, b| acc.mul(b))
}

/// Whether the Artin action of `b` agrees with that of the full twist, i.e.
/// conjugation by `x_1 ... x_d`.
pub fn acts_as_full_twist(b: &BraidWord) -> bool {
    b.action_images() == BraidWord::full_twist(b.strands()).action_images()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> FreeWord {
        FreeWord::new(v.to_vec())
    }

    fn br(d: usize, v: &[i32]) -> BraidWord {
        BraidWord::new(d, v.to_vec()).unwrap()
    }

    #[test]
    fn half_twists_follow_strands() {
        let b = br(3, &[1, 1, 2, -1]);
        assert_eq!(half_twists_within(&b, &[0, 1]), 2);
        // after s1 s1 s2 the strand from position 0 sits at position 0, the
        // one from 2 at position 1
        assert_eq!(half_twists_within(&b, &[0, 2]), -1);
        assert_eq!(half_twists_within(&b, &[1, 2]), 1);
    }

    #[test]
    fn single_generator() {
        assert_eq!(artin_act(&br(2, &[1]), &w(&[2])), w(&[1]));
        assert_eq!(artin_act(&br(2, &[1]), &w(&[1])), w(&[1, 2, -1]));
        assert_eq!(artin_act(&br(2, &[1, 1]), &w(&[2])), w(&[1, 2, -1]));
    }

    #[test]
    fn inverse_letter_inverts() {
        let b = br(4, &[2, -3, 1, 1, -2]);
        let id = b.mul(&b.inverse());
        assert!(id.is_empty());
        for k in 1..=4 {
            let x = FreeWord::generator(k);
            assert_eq!(artin_act(&b.inverse(), &artin_act(&b, &x)), x);
        }
    }

    #[test]
    fn left_action_composition() {
        let b1 = br(4, &[1, -3, 2]);
        let b2 = br(4, &[3, 3, -1, 2]);
        let x = w(&[1, -4, 2, 3]);
        assert_eq!(artin_act(&b1.mul(&b2), &x), artin_act(&b1, &artin_act(&b2, &x)));
    }

    #[test]
    fn full_twist_three_strands() {
        // brute force: substitute letter by letter, last letter first
        let b = BraidWord::full_twist(3);
        let c = w(&[1, 2, 3]);
        for k in 1..=3 {
            let mut x = FreeWord::generator(k);
            for &l in b.letters().iter().rev() {
                let i = l as usize;
                let mut imgs: Vec<FreeWord> = (1..=3).map(FreeWord::generator).collect();
                imgs[i - 1] = w(&[i as i32, i as i32 + 1, -(i as i32)]);
                imgs[i] = FreeWord::generator(i);
                x = x.substitute(&imgs);
            }
            assert_eq!(x, FreeWord::generator(k).conjugate_by(&c.inverse()));
        }
        assert_eq!(artin_act(&b, &c), c);
    }

    #[test]
    fn tangency_and_cusp_like_relators() {
        let r = relators_from_lasso(&br(6, &[4]));
        assert_eq!(r, vec![w(&[-5, 4]).cyclic_normal_form()]);
        assert!(relators_from_lasso(&BraidWord::identity(3)).is_empty());
        // five half twists: x1 = (x2 x1)^2 x2 (x2 x1)^-2
        let r = relators_from_lasso(&br(2, &[1, 1, 1, 1, 1]));
        let a = w(&[2, 1]);
        let expect = FreeWord::generator(1).inverse().mul(&a.pow(2).mul(&w(&[2])).mul(&a.pow(-2)));
        assert!(r.contains(&expect.cyclic_normal_form()));
    }

    #[test]
    fn permutation_of_braid() {
        assert_eq!(br(3, &[1, 2]).permutation(), vec![2, 0, 1]);
        assert_eq!(BraidWord::full_twist(4).permutation(), vec![0, 1, 2, 3]);
    }
}
