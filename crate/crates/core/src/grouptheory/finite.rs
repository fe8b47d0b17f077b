//! Finite groups by multiplication table, and epimorphisms onto them.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::word::{FreeWord, GroupPresentation};
use crate::Error;

/// Finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    pub name: String,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    pub labels: Vec<String>,
}

impl FiniteGroupTable {
    /// Validates the table: Latin square, identity at 0, associativity.
    pub fn new(name: &str, mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, Error> {
        let n = mul.len();
        let bad = |m: &str| Error::InvalidInput(format!("group table {name}: {m}"));
        if n == 0 || mul.iter().any(|r| r.len() != n) || labels.len() != n {
            return Err(bad("table must be square with one label per element"));
        }
        for i in 0..n {
            let row: BTreeSet<usize> = mul[i].iter().copied().collect();
            let column: BTreeSet<usize> = (0..n).map(|j| mul[j][i]).collect();
            if row.len() != n || column.len() != n || row.iter().any(|&x| x >= n) {
                return Err(bad("not a Latin square"));
            }
            if mul[0][i] != i || mul[i][0] != i {
                return Err(bad("element 0 is not the identity"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a][b];
                for c in 0..n {
                    if mul[ab][c] != mul[a][mul[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a][b] == 0).unwrap()).collect();
        Ok(FiniteGroupTable { name: name.to_string(), mul, inv, labels })
    }

    /// Group generated by permutations of `0..m` (images lists).
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Self, Error> {
        let m = gens.first().map_or(0, |g| g.len());
        let id: Vec<usize> = (0..m).collect();
        let compose = |p: &Vec<usize>, q: &Vec<usize>| -> Vec<usize> { (0..m).map(|i| q[p[i]]).collect() };
        let mut elems = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let h = compose(&e, g);
                if !elems.contains(&h) {
                    elems.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let index = |p: &Vec<usize>| elems.iter().position(|e| e == p).unwrap();
        let mul = elems.iter().map(|a| elems.iter().map(|b| index(&compose(a, b))).collect()).collect();
        let labels = elems.iter().map(|p| format!("{p:?}")).collect();
        FiniteGroupTable::new(name, mul, labels)
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|a| format!("r{a}")).collect();
        FiniteGroupTable::new(&format!("Z{n}"), mul, labels).expect("cyclic table")
    }

    /// Dihedral group of the given (even) order.
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 2 && order.is_multiple_of(2), "dihedral groups have even order");
        let m = order / 2;
        // element (s, k) is r^k s^s, index s*m + k
        let mul = (0..order)
            .map(|a| {
                (0..order)
                    .map(|b| {
                        let (sa, ka) = (a / m, a % m);
                        let (sb, kb) = (b / m, b % m);
                        let k = if sa == 0 { (ka + kb) % m } else { (ka + m - kb) % m };
                        ((sa + sb) % 2) * m + k
                    })
                    .collect()
            })
            .collect();
        let labels = (0..order).map(|a| if a < m { format!("r{a}") } else { format!("r{}s", a - m) }).collect();
        FiniteGroupTable::new(&format!("D{order}"), mul, labels).expect("dihedral table")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n > 1 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        } else {
            gens.push(vec![0; n.max(1)]);
        }
        FiniteGroupTable::from_permutations(&format!("S{n}"), &gens).expect("symmetric table")
    }

    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (n, m) = (a.order(), b.order());
        let mul =
            (0..n * m).map(|x| (0..n * m).map(|y| a.mul[x / m][y / m] * m + b.mul[x % m][y % m]).collect()).collect();
        let labels = (0..n * m).map(|x| format!("({},{})", a.labels[x / m], b.labels[x % m])).collect();
        FiniteGroupTable::new(&format!("{}x{}", a.name, b.name), mul, labels).expect("product table")
    }

    /// Parse `N` followed by `N*N` entries (whitespace separated).
    pub fn parse(name: &str, text: &str) -> Result<Self, Error> {
        let mut it = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad table entry {t:?}"))));
        let n = it.next().ok_or_else(|| Error::InvalidInput("empty group table".into()))??;
        let mut mul = vec![vec![0; n]; n];
        for row in mul.iter_mut() {
            for x in row.iter_mut() {
                *x = it.next().ok_or_else(|| Error::InvalidInput("group table too short".into()))??;
            }
        }
        if it.next().is_some() {
            return Err(Error::InvalidInput("group table too long".into()));
        }
        FiniteGroupTable::new(name, mul, (0..n).map(|i| i.to_string()).collect())
    }

    /// Text form accepted by [`FiniteGroupTable::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for row in &self.mul {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        s
    }

    /// Named groups: `z<n>`, `d<order>`, `s3`, and products joined by `x`.
    pub fn by_name(name: &str) -> Result<Self, Error> {
        let lower = name.to_ascii_lowercase();
        let parts: Vec<&str> = lower.split('x').collect();
        let mut g: Option<Self> = None;
        for p in parts {
            let num = |s: &str| match s.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(Error::InvalidInput(format!("unknown group {name:?}"))),
            };
            let h = if let Some(n) = p.strip_prefix('z') {
                FiniteGroupTable::cyclic(num(n)?)
            } else if let Some(n) = p.strip_prefix('d') {
                let n = num(n)?;
                if n < 2 || n % 2 == 1 {
                    return Err(Error::InvalidInput(format!("dihedral order must be even: {name:?}")));
                }
                FiniteGroupTable::dihedral(n)
            } else if let Some(n) = p.strip_prefix('s') {
                let n = num(n)?;
                if n > 6 {
                    return Err(Error::InvalidInput(format!("symmetric group too large: {name:?}")));
                }
                FiniteGroupTable::symmetric(n)
            } else {
                return Err(Error::InvalidInput(format!("unknown group {name:?}")));
            };
            g = Some(match g {
                None => h,
                Some(a) => FiniteGroupTable::direct_product(&a, &h),
            });
        }
        let mut g = g.ok_or_else(|| Error::InvalidInput("empty group name".into()))?;
        g.name = name.to_string();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut n) = (a, 1);
        while x != 0 {
            x = self.mul[x][a];
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Evaluate a word under generator images.
    pub fn eval(&self, w: &FreeWord, images: &[usize]) -> usize {
        w.letters().iter().fold(0, |acc, &l| {
            let g = images[l.unsigned_abs() as usize - 1];
            self.mul[acc][if l > 0 { g } else { self.inv[g] }]
        })
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut out = vec![0];
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let h = self.mul[e][g];
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                    queue.push_back(h);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn small_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        if let Some(g) = (0..n).find(|&g| self.element_order(g) == n) {
            return vec![g];
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.generated(&[a, b]).len() == n {
                    return vec![a, b];
                }
            }
        }
        let mut gens: Vec<usize> = Vec::new();
        for g in 0..n {
            if !self.generated(&gens).contains(&g) {
                gens.push(g);
            }
        }
        gens
    }

    /// Extend `gens -> imgs` to a homomorphism of the group to itself,
    /// returning the element map if it is well defined and bijective.
    fn extend_to_automorphism(&self, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(e) = queue.pop_front() {
            for (g, i) in gens.iter().zip(imgs) {
                let h = self.mul[e][*g];
                let v = self.mul[map[e]][*i];
                if map[h] == usize::MAX {
                    map[h] = v;
                    queue.push_back(h);
                } else if map[h] != v {
                    return None;
                }
            }
        }
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        (distinct.len() == n && !distinct.contains(&usize::MAX)).then_some(map)
    }

    /// All automorphisms as element maps (brute force, small groups only).
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.small_generating_set();
        let mut out = Vec::new();
        let mut imgs = vec![0; gens.len()];
        self.aut_search(&gens, &mut imgs, 0, &mut out);
        out
    }

    fn aut_search(&self, gens: &[usize], imgs: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == gens.len() {
            if let Some(m) = self.extend_to_automorphism(gens, imgs) {
                out.push(m);
            }
            return;
        }
        let want = self.element_order(gens[k]);
        for c in 0..self.order() {
            if self.element_order(c) == want {
                imgs[k] = c;
                self.aut_search(gens, imgs, k + 1, out);
            }
        }
    }
}

/// One surjection, as the images of the presentation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Epimorphism {
    pub images: Vec<usize>,
}

/// Surjections from the presented group onto `target`, one per orbit of the
/// automorphism group of `target`.
pub fn find_epimorphisms(p: &GroupPresentation, target: &FiniteGroupTable) -> Vec<Epimorphism> {
    let n = p.generators;
    // relators checked as soon as their largest generator is assigned
    let mut by_level: Vec<Vec<&FreeWord>> = vec![Vec::new(); n + 1];
    for r in &p.relators {
        by_level[r.max_generator()].push(r);
    }
    let auts = target.automorphisms();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut imgs = vec![0; n];
    search(target, &by_level, &auts, &mut imgs, 0, &mut found);
    found.into_iter().map(|images| Epimorphism { images }).collect()
}

fn search(
    g: &FiniteGroupTable,
    by_level: &[Vec<&FreeWord>],
    auts: &[Vec<usize>],
    imgs: &mut Vec<usize>,
    k: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    if k > 0 && !by_level[k].iter().all(|r| g.eval(r, imgs) == 0) {
        return;
    }
    if k == imgs.len() {
        if g.generated(imgs).len() == g.order() {
            let canon = auts
                .iter()
                .map(|a| imgs.iter().map(|&x| a[x]).collect::<Vec<usize>>())
                .min()
                .unwrap_or_else(|| imgs.clone());
            found.insert(canon);
        }
        return;
    }
    for c in 0..g.order() {
        imgs[k] = c;
        search(g, by_level, auts, imgs, k + 1, found);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tables_validate() {
        assert_eq!(FiniteGroupTable::dihedral(10).order(), 10);
        assert!(!FiniteGroupTable::dihedral(10).is_abelian());
        assert_eq!(FiniteGroupTable::symmetric(3).order(), 6);
        let p = FiniteGroupTable::direct_product(&FiniteGroupTable::dihedral(10), &FiniteGroupTable::cyclic(3));
        assert_eq!(p.order(), 30);
        assert_eq!(FiniteGroupTable::by_name("d10xz3").unwrap().order(), 30);
        assert!(FiniteGroupTable::by_name("z0").is_err());
        assert!(FiniteGroupTable::by_name("s9").is_err());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(FiniteGroupTable::cyclic(6).automorphisms().len(), 2);
        assert_eq!(FiniteGroupTable::symmetric(3).automorphisms().len(), 6);
        assert_eq!(FiniteGroupTable::dihedral(10).automorphisms().len(), 20);
        assert_eq!(FiniteGroupTable::cyclic(2).automorphisms().len(), 1);
    }

    #[test]
    fn text_round_trip() {
        let g = FiniteGroupTable::dihedral(6);
        let h = FiniteGroupTable::parse("D6", &g.to_text()).unwrap();
        assert_eq!(h.order(), 6);
        assert!(FiniteGroupTable::parse("bad", "2 0 1 1 1").is_err());
    }

    #[test]
    fn epimorphisms() {
        let free2 = GroupPresentation::new(2, vec![]);
        assert_eq!(find_epimorphisms(&free2, &FiniteGroupTable::cyclic(2)).len(), 3);
        let z6 = GroupPresentation::from_lists(1, &[&[1, 1, 1, 1, 1, 1]]);
        assert!(find_epimorphisms(&z6, &FiniteGroupTable::dihedral(10)).is_empty());
        assert_eq!(find_epimorphisms(&z6, &FiniteGroupTable::cyclic(3)).len(), 1);
    }
}
