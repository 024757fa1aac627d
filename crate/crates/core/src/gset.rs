//! Finite G-sets (thin projective spaces), equivariant maps, products,
//! disjoint unions, Grassmannians, isomorphism testing and classification.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{enumerate_homs_up_to_conjugacy, FiniteGroup, Target};
use crate::perm::Perm;

#[derive(Debug, Clone)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    /// one permutation of the points per group element
    action: Vec<Perm>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.action == other.action
    }
}

impl GSet {
    /// Builds a G-set from the full action table; validates that it is a
    /// right action under the crate convention. The empty G-set (size 0)
    /// stores no permutations.
    pub fn new(group: Arc<FiniteGroup>, size: usize, action: Vec<Perm>) -> Result<Self> {
        if size == 0 {
            return Ok(GSet { group, size: 0, action: vec![] });
        }
        if action.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: action.len(),
            });
        }
        {
            for p in &action {
                if p.degree() != size {
                    return Err(Error::DegreeMismatch(p.degree(), size));
                }
            }
            if !action[0].is_identity() {
                return Err(Error::Internal("identity must act trivially".into()));
            }
            for x in 0..group.order() {
                for y in 0..group.order() {
                    if action[group.mult(x, y)] != action[x].then(&action[y]) {
                        return Err(Error::Internal(format!(
                            "action table is not a homomorphism at ({x},{y})"
                        )));
                    }
                }
            }
        }
        Ok(GSet { group, size, action })
    }

    /// Builds a G-set from the images of the group's generators.
    pub fn from_generator_images(
        group: Arc<FiniteGroup>,
        size: usize,
        images: Vec<Perm>,
    ) -> Result<Self> {
        if images.len() != group.generators().len() {
            return Err(Error::DimensionMismatch {
                expected: group.generators().len(),
                got: images.len(),
            });
        }
        if size == 0 {
            return Ok(GSet { group, size, action: vec![] });
        }
        for p in &images {
            if p.degree() != size {
                return Err(Error::DegreeMismatch(p.degree(), size));
            }
        }
        if group.generators().is_empty() {
            return Ok(GSet {
                group,
                size,
                action: vec![Perm::identity(size)],
            });
        }
        let phi = group
            .extend_hom(&images, |a, b| a.then(b), |a, b| a == b)
            .ok_or(Error::NotAHomomorphism)?;
        GSet::new(group, size, phi)
    }

    pub fn trivial(group: Arc<FiniteGroup>, size: usize) -> Self {
        let action = if size == 0 {
            vec![]
        } else {
            vec![Perm::identity(size); group.order()]
        };
        GSet { group, size, action }
    }

    /// The group acting on itself by right multiplication.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action: Vec<Perm> = (0..n)
            .map(|g| {
                Perm::from_images((0..n).map(|x| group.mult(x, g)).collect()).unwrap()
            })
            .collect();
        GSet { group, size: n, action }
    }

    /// The group acting on its own permutation domain through perm_of.
    pub fn natural(group: Arc<FiniteGroup>) -> Self {
        let action = (0..group.order()).map(|g| group.perm_of(g).clone()).collect();
        GSet {
            size: group.degree(),
            group,
            action,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, point: usize, g: usize) -> usize {
        self.action[g].apply(point)
    }

    pub fn action_of(&self, g: usize) -> &Perm {
        &self.action[g]
    }

    pub fn same_group(&self, other: &GSet) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    pub fn product(&self, other: &GSet) -> Result<GSet> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        let (a, b) = (self.size, other.size);
        let size = a * b;
        if size == 0 {
            return Ok(GSet {
                group: self.group.clone(),
                size: 0,
                action: vec![],
            });
        }
        let action = (0..self.group.order())
            .map(|g| {
                let map = (0..size)
                    .map(|p| {
                        let (x, y) = (p / b, p % b);
                        self.apply(x, g) * b + other.apply(y, g)
                    })
                    .collect();
                Perm::from_images(map).unwrap()
            })
            .collect();
        Ok(GSet {
            group: self.group.clone(),
            size,
            action,
        })
    }

    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        let (a, b) = (self.size, other.size);
        let size = a + b;
        if size == 0 {
            return Ok(GSet {
                group: self.group.clone(),
                size: 0,
                action: vec![],
            });
        }
        let action = (0..self.group.order())
            .map(|g| {
                let mut map = Vec::with_capacity(size);
                for x in 0..a {
                    map.push(self.apply(x, g));
                }
                for y in 0..b {
                    map.push(a + other.apply(y, g));
                }
                Perm::from_images(map).unwrap()
            })
            .collect();
        Ok(GSet {
            group: self.group.clone(),
            size,
            action,
        })
    }

    /// Orbit partition, blocks sorted by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                for g in self.group.generators() {
                    let y = self.apply(x, *g);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer_order(&self, point: usize) -> usize {
        (0..self.group.order())
            .filter(|&g| self.apply(point, g) == point)
            .count()
    }

    /// The G-set of k-element subsets, encoded as bitmasks in increasing
    /// mask order, with the induced setwise action.
    pub fn grassmannian(&self, k: usize) -> Result<GSet> {
        if k == 0 || k > self.size {
            return Err(Error::SubsetSizeOutOfRange { k, n: self.size });
        }
        if self.size > 63 {
            return Err(Error::CliffordSizeLimit { n: self.size, limit: 63 });
        }
        let masks: Vec<u64> = (0u64..(1 << self.size))
            .filter(|m| m.count_ones() as usize == k)
            .collect();
        let index_of = |m: u64| masks.binary_search(&m).unwrap();
        let action = (0..self.group.order())
            .map(|g| {
                let map = masks
                    .iter()
                    .map(|&m| {
                        let mut img = 0u64;
                        for p in 0..self.size {
                            if m >> p & 1 == 1 {
                                img |= 1 << self.apply(p, g);
                            }
                        }
                        index_of(img)
                    })
                    .collect();
                Perm::from_images(map).unwrap()
            })
            .collect();
        Ok(GSet {
            group: self.group.clone(),
            size: masks.len(),
            action,
        })
    }

    /// Grassmannian masks in carrier order (for callers that need to read
    /// points back out of a grassmannian).
    pub fn subset_masks(size: usize, k: usize) -> Vec<u64> {
        (0u64..(1 << size))
            .filter(|m| m.count_ones() as usize == k)
            .collect()
    }
}

/// An equivariant map of G-sets over the same group.
#[derive(Debug, Clone)]
pub struct GMap {
    pub source: GSet,
    pub target: GSet,
    pub map: Vec<usize>,
}

impl GMap {
    pub fn new(source: GSet, target: GSet, map: Vec<usize>) -> Result<Self> {
        if !source.same_group(&target) {
            return Err(Error::GroupMismatch);
        }
        if map.len() != source.size() {
            return Err(Error::DimensionMismatch {
                expected: source.size(),
                got: map.len(),
            });
        }
        for x in 0..source.size() {
            if map[x] >= target.size() {
                return Err(Error::DimensionMismatch {
                    expected: target.size(),
                    got: map[x],
                });
            }
            for g in 0..source.group().order() {
                if map[source.apply(x, g)] != target.apply(map[x], g) {
                    return Err(Error::NotEquivariant { point: x, element: g });
                }
            }
        }
        Ok(GMap { source, target, map })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        for &y in &self.map {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<GMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(GMap {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

/// Finds an equivariant bijection X -> Y if one exists; the witness is the
/// first found by a deterministic orbit-by-orbit backtracking that always
/// tries the least available target, so repeated runs agree.
pub fn is_isomorphic(x: &GSet, y: &GSet) -> Result<Option<GMap>> {
    if !x.same_group(y) {
        return Err(Error::GroupMismatch);
    }
    if x.size() != y.size() {
        return Ok(None);
    }
    if x.size() == 0 {
        return Ok(Some(GMap {
            source: x.clone(),
            target: y.clone(),
            map: vec![],
        }));
    }
    let xo = x.orbits();
    let yo = y.orbits();
    if xo.len() != yo.len() {
        return Ok(None);
    }
    // fingerprint: (orbit size, stabilizer order of a point)
    let fp = |s: &GSet, orbit: &[usize]| (orbit.len(), s.stabilizer_order(orbit[0]));
    let xfp: Vec<_> = xo.iter().map(|o| fp(x, o)).collect();
    let yfp: Vec<_> = yo.iter().map(|o| fp(y, o)).collect();
    {
        let mut a = xfp.clone();
        let mut b = yfp.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }
    let mut map = vec![usize::MAX; x.size()];
    let mut used = vec![false; yo.len()];
    if match_orbits(x, y, &xo, &yo, &xfp, &yfp, 0, &mut used, &mut map) {
        let gmap = GMap::new(x.clone(), y.clone(), map)?;
        debug_assert!(gmap.is_bijective());
        Ok(Some(gmap))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn match_orbits(
    x: &GSet,
    y: &GSet,
    xo: &[Vec<usize>],
    yo: &[Vec<usize>],
    xfp: &[(usize, usize)],
    yfp: &[(usize, usize)],
    i: usize,
    used: &mut [bool],
    map: &mut [usize],
) -> bool {
    if i == xo.len() {
        return true;
    }
    let base = xo[i][0];
    // the base point's stabilizer, as explicit group elements
    let stab: Vec<usize> = (0..x.group().order())
        .filter(|&g| x.apply(base, g) == base)
        .collect();
    for j in 0..yo.len() {
        if used[j] || yfp[j] != xfp[i] {
            continue;
        }
        for &cand in &yo[j] {
            if stab.iter().all(|&g| y.apply(cand, g) == cand) {
                // well-defined orbit map: base^g -> cand^g
                for &p in &xo[i] {
                    map[p] = usize::MAX;
                }
                let mut ok = true;
                for g in 0..x.group().order() {
                    let from = x.apply(base, g);
                    let to = y.apply(cand, g);
                    if map[from] == usize::MAX {
                        map[from] = to;
                    } else if map[from] != to {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    used[j] = true;
                    if match_orbits(x, y, xo, yo, xfp, yfp, i + 1, used, map) {
                        return true;
                    }
                    used[j] = false;
                }
            }
        }
    }
    for &p in &xo[i] {
        map[p] = usize::MAX;
    }
    false
}

/// One G-set representative per isomorphism class of actions of G on n
/// points, via homomorphism classification into Sym_n.
pub fn classify_gsets(group: &Arc<FiniteGroup>, n: usize) -> Result<Vec<GSet>> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let homs = enumerate_homs_up_to_conjugacy(group, n, Target::Symmetric)?;
    homs.into_iter()
        .map(|h| {
            if group.generators().is_empty() {
                Ok(GSet::trivial(group.clone(), n))
            } else {
                GSet::from_generator_images(group.clone(), n, h.images)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<FiniteGroup> {
        FiniteGroup::cyclic(2)
    }

    #[test]
    fn product_examples() {
        let e = FiniteGroup::trivial();
        let x = GSet::trivial(e.clone(), 2);
        let y = GSet::trivial(e.clone(), 3);
        let p = x.product(&y).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.orbits().len(), 6);

        let r = GSet::regular(c2());
        let sq = r.product(&r).unwrap();
        assert_eq!(sq.size(), 4);
        let orbits = sq.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len() == 2));

        let one = GSet::trivial(c2(), 1);
        let r2 = GSet::regular(c2());
        let p = r2.product(&one).unwrap();
        assert!(is_isomorphic(&p, &r2).unwrap().is_some());
    }

    #[test]
    fn union_examples() {
        let e = FiniteGroup::trivial();
        let x = GSet::trivial(e.clone(), 2);
        let y = GSet::trivial(e.clone(), 3);
        let u = x.disjoint_union(&y).unwrap();
        assert_eq!(u.size(), 5);

        let g = c2();
        let a = GSet::regular(g.clone());
        let b = GSet::trivial(g.clone(), 3);
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.orbits().len(), a.orbits().len() + b.orbits().len());

        let empty = GSet::trivial(g.clone(), 0);
        let u = a.disjoint_union(&empty).unwrap();
        assert!(is_isomorphic(&u, &a).unwrap().is_some());
    }

    #[test]
    fn orbit_examples() {
        let e = FiniteGroup::trivial();
        assert_eq!(GSet::trivial(e, 4).orbits().len(), 4);
        assert_eq!(GSet::regular(c2()).orbits(), vec![vec![0, 1]]);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(GSet::natural(s3).orbits(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn grassmannian_examples() {
        let e = FiniteGroup::trivial();
        let x = GSet::trivial(e.clone(), 4);
        assert_eq!(x.grassmannian(2).unwrap().size(), 6);
        assert_eq!(x.grassmannian(4).unwrap().size(), 1);
        assert!(x.grassmannian(5).is_err());
        assert!(x.grassmannian(0).is_err());

        let c4 = FiniteGroup::cyclic(4);
        let nat = GSet::natural(c4);
        let gr = nat.grassmannian(2).unwrap();
        let mut sizes: Vec<usize> = gr.orbits().iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn grassmannian_complement_duality() {
        let c4 = FiniteGroup::cyclic(4);
        let nat = GSet::natural(c4);
        let g1 = nat.grassmannian(1).unwrap();
        let g3 = nat.grassmannian(3).unwrap();
        let w = is_isomorphic(&g1, &g3).unwrap().unwrap();
        assert!(w.is_bijective());
        // complementation is itself an equivariant bijection
        let m1 = GSet::subset_masks(4, 1);
        let m3 = GSet::subset_masks(4, 3);
        let comp: Vec<usize> = m1
            .iter()
            .map(|&m| m3.binary_search(&(!m & 0b1111)).unwrap())
            .collect();
        GMap::new(g1, g3, comp).unwrap();
    }

    #[test]
    fn iso_examples() {
        let g = c2();
        let r1 = GSet::regular(g.clone());
        let r2 = GSet::regular(g.clone());
        assert!(is_isomorphic(&r1, &r1).unwrap().is_some());
        assert!(is_isomorphic(&r1, &r2).unwrap().is_some());
        let t = GSet::trivial(g.clone(), 2);
        assert!(is_isomorphic(&t, &r1).unwrap().is_none());
        let e = FiniteGroup::trivial();
        assert!(is_isomorphic(&t, &GSet::trivial(e, 2)).is_err());
    }

    #[test]
    fn iso_symmetry_and_witness_inverse() {
        let g = c2();
        let a = GSet::regular(g.clone()).disjoint_union(&GSet::trivial(g.clone(), 1)).unwrap();
        let b = GSet::trivial(g.clone(), 1).disjoint_union(&GSet::regular(g.clone())).unwrap();
        let w = is_isomorphic(&a, &b).unwrap().unwrap();
        let back = w.inverse().unwrap();
        GMap::new(back.source.clone(), back.target.clone(), back.map.clone()).unwrap();
        assert!(is_isomorphic(&b, &a).unwrap().is_some());
    }

    #[test]
    fn classify_examples() {
        let e = FiniteGroup::trivial();
        assert_eq!(classify_gsets(&e, 3).unwrap().len(), 1);
        let g = c2();
        assert_eq!(classify_gsets(&g, 4).unwrap().len(), 3);
        assert_eq!(classify_gsets(&g, 2).unwrap().len(), 2);
    }

    #[test]
    fn classify_reps_pairwise_non_isomorphic() {
        let g = c2();
        let reps = classify_gsets(&g, 4).unwrap();
        for i in 0..reps.len() {
            for j in 0..reps.len() {
                let iso = is_isomorphic(&reps[i], &reps[j]).unwrap().is_some();
                assert_eq!(iso, i == j);
            }
        }
    }
}
