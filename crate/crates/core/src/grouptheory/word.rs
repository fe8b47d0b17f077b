use std::fmt;

use serde::{Deserialize, Serialize};

/// Freely reduced word in generators `x_1, x_2, ...`; letter `k` is `x_k`
/// and `-k` is its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn new(letters: Vec<i32>) -> Self {
        assert!(letters.iter().all(|&l| l != 0), "letter 0 is not a generator");
        let mut w = FreeWord(Vec::with_capacity(letters.len()));
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(k: usize) -> Self {
        FreeWord(vec![k as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Append one letter with free cancellation.
    pub fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self^-1 g self`.
    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.inverse().mul(self).mul(g)
    }

    /// Substitute a word for every generator.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut w = FreeWord::identity();
        for &l in &self.0 {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                w = w.mul(img);
            } else {
                w = w.mul(&img.inverse());
            }
        }
        w
    }

    /// Remove matching letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let v = &self.0;
        let (mut i, mut j) = (0, v.len());
        while j >= i + 2 && v[i] == -v[j - 1] {
            i += 1;
            j -= 1;
        }
        FreeWord(v[i..j].to_vec())
    }

    /// Lexicographically least rotation of the cyclic reduction of the word
    /// or its inverse.
    pub fn cyclic_normal_form(&self) -> FreeWord {
        let r = self.cyclically_reduced();
        let mut best: Option<Vec<i32>> = None;
        for w in [r.0.clone(), r.inverse().0] {
            for k in 0..w.len().max(1) {
                let mut rot = w[k..].to_vec();
                rot.extend_from_slice(&w[..k]);
                if best.as_ref().is_none_or(|b| letter_key(&rot) < letter_key(b)) {
                    best = Some(rot);
                }
            }
        }
        FreeWord(best.unwrap_or_default())
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Exponent sum of each of the first `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut s = vec![0; n];
        for &l in &self.0 {
            s[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        s
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut n = 1;
            while i + n < self.0.len() && self.0[i + n] == l {
                n += 1;
            }
            let name = &names[l.unsigned_abs() as usize - 1];
            let e = n as i64 * l.signum() as i64;
            parts.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
            i += n;
        }
        parts.join(" ")
    }
}

/// Ordering for normal forms: shorter first, then by generator with
/// positive letters before inverses.
fn letter_key(w: &[i32]) -> (usize, Vec<(u32, bool)>) {
    (w.len(), w.iter().map(|l| (l.unsigned_abs(), *l < 0)).collect())
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_generator();
        let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// Finitely presented group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        let mut p = GroupPresentation { generators, relators: Vec::new() };
        for r in relators {
            p.add_relator(r);
        }
        p
    }

    /// Build from signed index lists.
    pub fn from_lists(generators: usize, relators: &[&[i32]]) -> Self {
        GroupPresentation::new(generators, relators.iter().map(|r| FreeWord::new(r.to_vec())).collect())
    }

    /// Add a relator in cyclic normal form unless trivial or already present.
    pub fn add_relator(&mut self, r: FreeWord) -> bool {
        let r = r.cyclic_normal_form();
        if r.is_empty() || self.relators.contains(&r) {
            return false;
        }
        self.relators.push(r);
        true
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.generators).map(|k| format!("x{k}")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.display_with(&names)).collect();
        write!(f, "< {} | {} >", names.join(", "), rels.join(", "))
    }
}
