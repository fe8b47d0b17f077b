//! Todd-Coxeter coset enumeration over the trivial subgroup, HLT strategy
//! with a lookahead pass when the table is full.

use super::word::{FreeWord, GroupPresentation};
use crate::Error;

const NONE: u32 = u32::MAX;

/// Default bound on the number of simultaneously defined cosets.
pub const DEFAULT_COSET_BOUND: usize = 1_000_000;

/// Completed coset table: the regular permutation representation.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// `action[c][col]`, columns `2k` for `x_{k+1}` and `2k + 1` for its
    /// inverse; coset 0 is the identity.
    action: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        self.action.len()
    }

    /// Coset reached from `start` by reading `w`.
    pub fn apply(&self, start: usize, w: &FreeWord) -> usize {
        w.letters().iter().fold(start, |c, &l| self.action[c][col(l)] as usize)
    }

    /// Whether `w` is the identity in the group.
    pub fn is_identity(&self, w: &FreeWord) -> bool {
        self.apply(0, w) == 0
    }

    /// Whether `a` and `b` are equal in the group.
    pub fn equal(&self, a: &FreeWord, b: &FreeWord) -> bool {
        self.apply(0, a) == self.apply(0, b)
    }

    /// Order of the element `w`.
    pub fn element_order(&self, w: &FreeWord) -> usize {
        let mut c = self.apply(0, w);
        let mut n = 1;
        while c != 0 {
            c = self.apply(c, w);
            n += 1;
        }
        n
    }

    /// Whether `w` commutes with every generator.
    pub fn is_central(&self, w: &FreeWord, generators: usize) -> bool {
        (1..=generators).all(|k| {
            let g = FreeWord::generator(k);
            self.equal(&w.mul(&g), &g.mul(w))
        })
    }
}

fn col(l: i32) -> usize {
    let k = l.unsigned_abs() as usize - 1;
    if l > 0 {
        2 * k
    } else {
        2 * k + 1
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    bound: usize,
    relators: Vec<Vec<usize>>,
}

impl Enumerator {
    fn rep(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Error> {
        if self.live >= self.bound {
            return Err(Error::Exceeded(self.bound));
        }
        let d = self.table.len() as u32;
        self.table.push(vec![NONE; self.ncols]);
        self.parent.push(d);
        self.live += 1;
        self.table[c as usize][x] = d;
        self.table[d as usize][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.table[g as usize][x];
                if d == NONE {
                    continue;
                }
                self.table[d as usize][x ^ 1] = NONE;
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.table[mu as usize][x];
                let nx = self.table[nu as usize][x ^ 1];
                if mx != NONE {
                    self.merge(nu, mx, &mut queue);
                } else if nx != NONE {
                    self.merge(mu, nx, &mut queue);
                } else {
                    self.table[mu as usize][x] = nu;
                    self.table[nu as usize][x ^ 1] = mu;
                }
            }
        }
    }

    /// Trace relator `w` from and back to `a`, deducing and (if `fill`)
    /// defining cosets to close it.
    fn scan(&mut self, a: u32, ri: usize, fill: bool) -> Result<(), Error> {
        let len = self.relators[ri].len();
        if len == 0 {
            return Ok(());
        }
        let mut f = a;
        let mut i = 0usize;
        let mut b = a;
        let mut j = len as isize - 1;
        loop {
            while (i as isize) <= j {
                let x = self.relators[ri][i];
                let n = self.table[f as usize][x];
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if i as isize > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize {
                let x = self.relators[ri][j as usize];
                let n = self.table[b as usize][x ^ 1];
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = self.relators[ri][i];
                self.table[f as usize][x] = b;
                self.table[b as usize][x ^ 1] = f;
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = self.relators[ri][i];
            self.define(f, x)?;
        }
    }

    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.table.len() as u32 {
            for ri in 0..self.relators.len() {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, ri, false);
            }
            c += 1;
        }
    }

    fn run(&mut self) -> Result<(), Error> {
        let mut a: u32 = 0;
        while (a as usize) < self.table.len() {
            if self.alive(a) {
                for ri in 0..self.relators.len() {
                    if !self.alive(a) {
                        break;
                    }
                    self.fill_scan(a, ri)?;
                }
                for x in 0..self.ncols {
                    if !self.alive(a) {
                        break;
                    }
                    if self.table[a as usize][x] == NONE {
                        self.define_or_look(a, x)?;
                    }
                }
            }
            a += 1;
        }
        Ok(())
    }

    fn fill_scan(&mut self, a: u32, ri: usize) -> Result<(), Error> {
        match self.scan(a, ri, true) {
            Err(Error::Exceeded(_)) => {
                let before = self.live;
                self.lookahead();
                if self.live < before && self.alive(a) {
                    self.scan(a, ri, true)
                } else if self.live < before {
                    Ok(())
                } else {
                    Err(Error::Exceeded(self.bound))
                }
            }
            other => other,
        }
    }

    fn define_or_look(&mut self, a: u32, x: usize) -> Result<(), Error> {
        match self.define(a, x) {
            Err(Error::Exceeded(_)) => {
                let before = self.live;
                self.lookahead();
                if self.live >= before {
                    return Err(Error::Exceeded(self.bound));
                }
                if self.alive(a) && self.table[a as usize][x] == NONE {
                    self.define(a, x)?;
                }
                Ok(())
            }
            other => other,
        }
    }

    fn compact(mut self) -> CosetTable {
        let n = self.table.len();
        let mut index = vec![NONE; n];
        let mut next = 0;
        for c in 0..n {
            if self.alive(c as u32) {
                index[c] = next;
                next += 1;
            }
        }
        let mut action = Vec::with_capacity(next as usize);
        for c in 0..n {
            if !self.alive(c as u32) {
                continue;
            }
            let row: Vec<u32> = (0..self.ncols)
                .map(|x| {
                    let d = self.table[c][x];
                    let d = self.rep(d);
                    index[d as usize]
                })
                .collect();
            action.push(row);
        }
        CosetTable { action }
    }
}

/// Enumerate the cosets of the trivial subgroup with at most `max_cosets`
/// live cosets. `Exceeded` means the enumeration is inconclusive.
pub fn coset_table(p: &GroupPresentation, max_cosets: usize) -> Result<CosetTable, Error> {
    let ncols = 2 * p.generators;
    let relators: Vec<Vec<usize>> = p.relators.iter().map(|r| r.letters().iter().map(|&l| col(l)).collect()).collect();
    let mut e = Enumerator {
        ncols,
        table: vec![vec![NONE; ncols]],
        parent: vec![0],
        live: 1,
        bound: max_cosets.max(1),
        relators,
    };
    e.run()?;
    Ok(e.compact())
}

/// Order of the group when coset enumeration completes within the bound.
pub fn coset_enumeration_order(p: &GroupPresentation, max_cosets: usize) -> Result<usize, Error> {
    Ok(coset_table(p, max_cosets)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let one = GroupPresentation::from_lists(1, &[&[1]]);
        assert_eq!(coset_enumeration_order(&one, 100).unwrap(), 1);
        let s3 = GroupPresentation::from_lists(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        assert_eq!(coset_enumeration_order(&s3, 100).unwrap(), 6);
        // binary-like test: <a, b | a^3, b^5, (ab)^2> is A5
        let a5 = GroupPresentation::from_lists(2, &[&[1, 1, 1], &[2, 2, 2, 2, 2], &[1, 2, 1, 2]]);
        assert_eq!(coset_enumeration_order(&a5, 10_000).unwrap(), 60);
        let z = GroupPresentation::new(1, vec![]);
        assert!(matches!(coset_enumeration_order(&z, 50), Err(Error::Exceeded(50))));
    }

    #[test]
    fn table_answers_word_problem() {
        let s3 = GroupPresentation::from_lists(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        let t = coset_table(&s3, 100).unwrap();
        assert!(t.is_identity(&FreeWord::new(vec![2, 1, 2, 1])));
        assert_eq!(t.element_order(&FreeWord::new(vec![1, 2])), 2);
        assert!(!t.is_central(&FreeWord::generator(1), 2));
    }
}
