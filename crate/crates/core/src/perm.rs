//! Permutations of `0..n` in one-line notation.
//!
//! The whole crate uses a single composition convention: actions are
//! *right* actions, written `x^g`. `p.then(q)` applies `p` first, so
//! `x^(gh) = (x^g)^h` corresponds to `perm(g).then(perm(h))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { map: (0..n).collect() }
    }

    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n {
                return Err(Error::NotABijection {
                    degree: n,
                    reason: format!("image {i} out of range"),
                });
            }
            if seen[i] {
                return Err(Error::NotABijection {
                    degree: n,
                    reason: format!("image {i} repeated"),
                });
            }
            seen[i] = true;
        }
        Ok(Perm { map })
    }

    /// Builds a permutation of `0..n` from cycle notation, e.g. `(0 1)(2 3)`.
    /// Fixed points are omitted; the empty string is the identity.
    pub fn from_cycles(s: &str, n: usize) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let s = s.trim();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("expected '(' in cycle notation: {s:?}"),
            })?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unexpected text in cycle notation: {s:?}"),
                });
            }
            let close = rest.find(')').ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unclosed cycle in {s:?}"),
            })?;
            let cycle: Vec<usize> = rest[open + 1..close]
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: 0,
                        msg: format!("bad point {t:?} in cycle notation"),
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &cycle {
                if p >= n {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("point {p} out of domain 0..{n}"),
                    });
                }
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if map[from] != from {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("point {from} appears in two cycles"),
                    });
                }
                map[from] = to;
            }
            // self-check for length-1 "cycles" that alias fixed points
            rest = &rest[close + 1..];
        }
        Perm::from_images(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j] = i;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// Parity of the permutation: true when it is a product of an even
    /// number of transpositions.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        let mut transpositions = 0;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    pub fn one_line_string(&self) -> String {
        let parts: Vec<String> = self.map.iter().map(|p| p.to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.cycle_string())
    }
}

/// All permutations of `0..n` in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm { map: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        // p = (0 1 2), q = (0 1): x^(pq) = (x^p)^q
        let p = Perm::from_cycles("(0 1 2)", 3).unwrap();
        let q = Perm::from_cycles("(0 1)", 3).unwrap();
        let pq = p.then(&q);
        assert_eq!(pq.apply(0), q.apply(p.apply(0)));
        assert_eq!(pq.images(), &[0, 2, 1]);
        // the other order differs, so the convention is observable
        assert_ne!(pq, q.then(&p));
    }

    #[test]
    fn cycles_round_trip() {
        let p = Perm::from_cycles("(0 1)(2 3)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2, 4]);
        let q = Perm::from_cycles(&p.cycle_string(), 5).unwrap();
        assert_eq!(p, q);
        assert!(Perm::from_cycles("", 3).unwrap().is_identity());
    }

    #[test]
    fn parity_and_order() {
        assert!(Perm::identity(4).is_even());
        assert!(!Perm::from_cycles("(0 1)", 4).unwrap().is_even());
        assert!(Perm::from_cycles("(0 1 2)", 4).unwrap().is_even());
        assert_eq!(Perm::from_cycles("(0 1 2)", 4).unwrap().order(), 3);
        assert_eq!(Perm::from_cycles("(0 1)(2 3)", 4).unwrap().order(), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![2, 0]).is_err());
        assert!(Perm::from_images(vec![]).is_err());
    }

    #[test]
    fn all_perms_lex() {
        let ps = all_perms(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], Perm::identity(3));
        assert_eq!(ps[5].images(), &[2, 1, 0]);
    }
}
