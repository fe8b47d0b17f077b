//! Tietze transformations: generator elimination and relator shortening.

use super::word::{FreeWord, GroupPresentation};

/// Limits keeping simplification bounded and deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeLimits {
    /// Do not eliminate a generator if the total relator length would grow
    /// beyond this.
    pub max_total_length: usize,
    /// Do not eliminate a generator if any relator would grow beyond this.
    pub max_relator_length: usize,
    pub max_rounds: usize,
}

impl Default for TietzeLimits {
    fn default() -> Self {
        TietzeLimits { max_total_length: 20_000, max_relator_length: 2_000, max_rounds: 200 }
    }
}

/// Simplified presentation with the images of the original generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// `images[k]` expresses original generator `k + 1` in the new generators.
    pub images: Vec<FreeWord>,
}

impl Simplified {
    /// Image of a word in the original generators.
    pub fn map_word(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }
}

fn occurrences(r: &FreeWord, g: i32) -> usize {
    r.letters().iter().filter(|l| l.abs() == g).count()
}

/// `g` as a word in the other letters of `r`, where `g` occurs once in `r`.
fn solve_for(r: &FreeWord, g: i32) -> FreeWord {
    let v = r.letters();
    let pos = v.iter().position(|l| l.abs() == g).unwrap();
    let e = v[pos].signum();
    // r = a g^e b, cyclically g^e (b a) = 1
    let mut rest: Vec<i32> = v[pos + 1..].to_vec();
    rest.extend_from_slice(&v[..pos]);
    let rest = FreeWord::new(rest);
    if e > 0 {
        rest.inverse()
    } else {
        rest
    }
}

/// Remove generator `g` (now unused) and shift the higher indices down.
fn drop_generator(w: &FreeWord, g: i32) -> FreeWord {
    FreeWord::new(
        w.letters()
            .iter()
            .map(|&l| {
                debug_assert!(l.abs() != g);
                if l.abs() > g {
                    l - l.signum()
                } else {
                    l
                }
            })
            .collect(),
    )
}

fn normalize(rels: Vec<FreeWord>) -> Vec<FreeWord> {
    let mut out: Vec<FreeWord> = Vec::new();
    for r in rels {
        let r = r.cyclic_normal_form();
        if !r.is_empty() && !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

struct State {
    generators: usize,
    relators: Vec<FreeWord>,
    images: Vec<FreeWord>,
}

impl State {
    fn total(&self) -> usize {
        self.relators.iter().map(|r| r.len()).sum()
    }

    /// Best generator elimination: (relator index, generator, new total).
    fn elimination(&self, limits: &TietzeLimits) -> Option<(usize, i32, usize)> {
        let total = self.total();
        let mut best: Option<(usize, i32, usize)> = None;
        for (ri, r) in self.relators.iter().enumerate() {
            for g in 1..=self.generators as i32 {
                if occurrences(r, g) != 1 {
                    continue;
                }
                let sub_len = r.len() - 1;
                let mut new_total = total - r.len();
                let mut longest = 0;
                for (k, s) in self.relators.iter().enumerate() {
                    if k != ri {
                        let n = s.len() + occurrences(s, g) * sub_len.saturating_sub(1);
                        new_total += n - s.len();
                        longest = longest.max(n);
                    }
                }
                let grows = new_total > total;
                if grows && (new_total > limits.max_total_length || longest > limits.max_relator_length) {
                    continue;
                }
                if best.is_none_or(|b| new_total < b.2) {
                    best = Some((ri, g, new_total));
                }
            }
        }
        best
    }

    fn eliminate(&mut self, ri: usize, g: i32) {
        let r = self.relators.remove(ri);
        let w = solve_for(&r, g);
        let mut subst: Vec<FreeWord> = (1..=self.generators).map(FreeWord::generator).collect();
        subst[g as usize - 1] = w;
        let rels: Vec<FreeWord> = self.relators.iter().map(|s| drop_generator(&s.substitute(&subst), g)).collect();
        self.images = self.images.iter().map(|s| drop_generator(&s.substitute(&subst), g)).collect();
        self.generators -= 1;
        self.relators = normalize(rels);
    }

    /// Replace a long piece of one relator by the shorter complement taken
    /// from another relator. Returns whether anything changed.
    fn shorten(&mut self) -> bool {
        let n = self.relators.len();
        for si in 0..n {
            let s = self.relators[si].clone();
            let l = s.len();
            if l < 2 {
                continue;
            }
            let mut rots: Vec<Vec<i32>> = Vec::new();
            for w in [s.letters().to_vec(), s.inverse().letters().to_vec()] {
                for k in 0..l {
                    let mut r = w[k..].to_vec();
                    r.extend_from_slice(&w[..k]);
                    rots.push(r);
                }
            }
            for ri in 0..n {
                if ri == si {
                    continue;
                }
                let r = self.relators[ri].letters().to_vec();
                let m = r.len();
                if m < l / 2 + 1 {
                    continue;
                }
                // s = u v with |u| > |v|: replace a cyclic occurrence of u in r by v^-1
                for rot in &rots {
                    for ul in (l / 2 + 1..=l.min(m)).rev() {
                        let u = &rot[..ul];
                        let v = &rot[ul..];
                        for start in 0..m {
                            if (0..ul).all(|i| r[(start + i) % m] == u[i]) {
                                let mut out: Vec<i32> = Vec::with_capacity(m);
                                for i in ul..m {
                                    out.push(r[(start + i) % m]);
                                }
                                let mut nw = FreeWord::new(v.iter().rev().map(|x| -x).collect());
                                for x in out {
                                    nw.push(x);
                                }
                                let nw = nw.cyclic_normal_form();
                                if nw.len() < m {
                                    self.relators[ri] = nw;
                                    self.relators = normalize(std::mem::take(&mut self.relators));
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

/// Simplify and keep track of the original generators.
pub fn tietze_simplify_tracked(p: &GroupPresentation, limits: &TietzeLimits) -> Simplified {
    let mut st = State {
        generators: p.generators,
        relators: normalize(p.relators.clone()),
        images: (1..=p.generators).map(FreeWord::generator).collect(),
    };
    for _ in 0..limits.max_rounds {
        if let Some((ri, g, _)) = st.elimination(limits) {
            st.eliminate(ri, g);
            continue;
        }
        if !st.shorten() {
            break;
        }
    }
    Simplified { presentation: GroupPresentation::new(st.generators, st.relators), images: st.images }
}

/// Simplified presentation of an isomorphic group.
pub fn tietze_simplify(p: &GroupPresentation, limits: &TietzeLimits) -> GroupPresentation {
    tietze_simplify_tracked(p, limits).presentation
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_relator_kills_generator() {
        let p = GroupPresentation::from_lists(2, &[&[2]]);
        let s = tietze_simplify(&p, &TietzeLimits::default());
        assert_eq!(s.generators, 1);
        assert!(s.relators.is_empty());
    }

    #[test]
    fn equal_generators_merge() {
        // <a, b | a b^-1, a^3> -> <a | a^3>
        let p = GroupPresentation::from_lists(2, &[&[1, -2], &[1, 1, 1]]);
        let s = tietze_simplify_tracked(&p, &TietzeLimits::default());
        assert_eq!(s.presentation.generators, 1);
        assert_eq!(s.presentation.relators, vec![FreeWord::new(vec![1, 1, 1])]);
        assert_eq!(s.images[0], s.images[1]);
    }

    #[test]
    fn shortening_uses_other_relators() {
        // a^5 = 1 turns a^4 b into a^-1 b
        let p = GroupPresentation::from_lists(2, &[&[1, 1, 1, 1, 1], &[1, 1, 1, 1, 2, 2]]);
        let s = tietze_simplify(&p, &TietzeLimits { max_total_length: 0, max_relator_length: 0, max_rounds: 10 });
        assert!(s.total_length() < p.total_length());
    }
}
