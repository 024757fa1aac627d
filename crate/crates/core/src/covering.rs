//! Coverings of G-sets, the involution/double-covering dictionary, the
//! Clifford set of a thin quadric, its discriminant and orientations.
//!
//! Sections of a double covering are encoded as bitmasks over the fibers:
//! fix in every fiber the representative with the least point index; bit i
//! set means the non-representative is chosen in fiber i. Complementation
//! is then a mask flip, and the section order is the mask order.

use crate::error::{Error, Result};
use crate::group::{enumerate_homs_up_to_conjugacy, FiniteGroup, Target};
use crate::gset::{GMap, GSet};
use crate::perm::Perm;

use std::sync::Arc;

/// Largest base size for which the 2^n Clifford set is materialized.
pub const MAX_CLIFFORD_BASE: usize = 16;

#[derive(Debug, Clone)]
pub struct Covering {
    total: GSet,
    base: GSet,
    pi: Vec<usize>,
    degree: usize,
}

impl Covering {
    /// Validates an explicit covering: pi equivariant, surjective, with
    /// constant fiber size.
    pub fn new(total: GSet, base: GSet, pi: Vec<usize>) -> Result<Self> {
        if base.size() == 0 {
            return Err(Error::EmptyBase);
        }
        if !total.same_group(&base) {
            return Err(Error::GroupMismatch);
        }
        if pi.len() != total.size() {
            return Err(Error::DimensionMismatch {
                expected: total.size(),
                got: pi.len(),
            });
        }
        let mut fiber_sizes = vec![0usize; base.size()];
        for (x, &b) in pi.iter().enumerate() {
            if b >= base.size() {
                return Err(Error::NotSurjective);
            }
            fiber_sizes[b] += 1;
            for g in 0..total.group().order() {
                if pi[total.apply(x, g)] != base.apply(b, g) {
                    return Err(Error::NotEquivariant { point: x, element: g });
                }
            }
        }
        if fiber_sizes.iter().any(|&s| s == 0) {
            return Err(Error::NotSurjective);
        }
        let degree = fiber_sizes[0];
        if fiber_sizes.iter().any(|&s| s != degree) {
            return Err(Error::UnequalFibers);
        }
        Ok(Covering { total, base, pi, degree })
    }

    /// Builds a covering from the total space and the fiber map alone,
    /// deriving the base action from equivariance.
    pub fn from_total(total: GSet, pi: Vec<usize>) -> Result<Self> {
        if pi.len() != total.size() {
            return Err(Error::DimensionMismatch {
                expected: total.size(),
                got: pi.len(),
            });
        }
        let n = match pi.iter().max() {
            Some(&m) => m + 1,
            None => return Err(Error::EmptyBase),
        };
        let mut rep = vec![usize::MAX; n];
        for (x, &b) in pi.iter().enumerate() {
            if rep[b] == usize::MAX {
                rep[b] = x;
            }
        }
        if rep.iter().any(|&r| r == usize::MAX) {
            return Err(Error::NotSurjective);
        }
        let order = total.group().order();
        let mut action = Vec::with_capacity(order);
        for g in 0..order {
            let map: Vec<usize> = (0..n).map(|b| pi[total.apply(rep[b], g)]).collect();
            action.push(Perm::from_images(map).map_err(|_| Error::UnequalFibers)?);
        }
        let base = GSet::new(total.group().clone(), n, action)?;
        Covering::new(total, base, pi)
    }

    pub fn total(&self) -> &GSet {
        &self.total
    }

    pub fn base(&self) -> &GSet {
        &self.base
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_size(&self) -> usize {
        self.base.size()
    }

    pub fn fiber(&self, b: usize) -> Vec<usize> {
        (0..self.total.size()).filter(|&x| self.pi[x] == b).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Involution {
    space: GSet,
    sigma: Perm,
}

impl Involution {
    pub fn new(space: GSet, sigma: Perm) -> Result<Self> {
        if sigma.degree() != space.size() {
            return Err(Error::DegreeMismatch(sigma.degree(), space.size()));
        }
        if !sigma.then(&sigma).is_identity() || sigma.is_identity() {
            return Err(Error::BadInvolution("order is not 2"));
        }
        if (0..space.size()).any(|x| sigma.apply(x) == x) {
            return Err(Error::BadInvolution("has a fixed point"));
        }
        for g in 0..space.group().order() {
            if space.action_of(g).then(&sigma) != sigma.then(space.action_of(g)) {
                return Err(Error::BadInvolution("not equivariant"));
            }
        }
        Ok(Involution { space, sigma })
    }

    pub fn space(&self) -> &GSet {
        &self.space
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }
}

/// Quotient by the involution: the base is the set of sigma-orbits (pairs)
/// ordered by least point.
pub fn covering_from_involution(inv: &Involution) -> Result<Covering> {
    let y = inv.space();
    let mut pair_of = vec![usize::MAX; y.size()];
    let mut pairs = Vec::new();
    for x in 0..y.size() {
        if pair_of[x] == usize::MAX {
            let b = pairs.len();
            pair_of[x] = b;
            pair_of[inv.sigma().apply(x)] = b;
            pairs.push((x, inv.sigma().apply(x)));
        }
    }
    Covering::from_total(y.clone(), pair_of)
}

/// The canonical fiber swap of a double covering.
pub fn involution_from_covering(cov: &Covering) -> Result<Involution> {
    if cov.degree() != 2 {
        return Err(Error::NotDoubleCovering(cov.degree()));
    }
    let mut map = vec![usize::MAX; cov.total().size()];
    for b in 0..cov.base_size() {
        let f = cov.fiber(b);
        map[f[0]] = f[1];
        map[f[1]] = f[0];
    }
    Involution::new(cov.total().clone(), Perm::from_images(map)?)
}

/// The G-set of all 2^n sections of a double covering, with the complement
/// involution, the discriminant class of every section, and the induced
/// action on the two classes.
#[derive(Debug, Clone)]
pub struct CliffordSet {
    covering: Covering,
    reps: Vec<usize>,
    others: Vec<usize>,
    gset: GSet,
    complement: Perm,
    class_of: Vec<u8>,
    delta_swaps: Vec<bool>,
}

impl CliffordSet {
    pub fn new(cov: &Covering) -> Result<Self> {
        Self::with_representatives(cov, None)
    }

    /// Same construction with an explicit per-fiber representative choice;
    /// used by tests to confirm the class partition is anchor-independent.
    pub fn with_representatives(cov: &Covering, reps: Option<Vec<usize>>) -> Result<Self> {
        if cov.degree() != 2 {
            return Err(Error::NotDoubleCovering(cov.degree()));
        }
        let n = cov.base_size();
        if n > MAX_CLIFFORD_BASE {
            return Err(Error::CliffordSizeLimit { n, limit: MAX_CLIFFORD_BASE });
        }
        let fibers: Vec<Vec<usize>> = (0..n).map(|b| cov.fiber(b)).collect();
        let reps = match reps {
            Some(r) => {
                for (b, &x) in r.iter().enumerate() {
                    if cov.pi()[x] != b {
                        return Err(Error::Internal("representative not in its fiber".into()));
                    }
                }
                r
            }
            None => fibers.iter().map(|f| f[0]).collect(),
        };
        let others: Vec<usize> = (0..n)
            .map(|b| {
                let f = &fibers[b];
                if f[0] == reps[b] { f[1] } else { f[0] }
            })
            .collect();
        let count = 1usize << n;
        let point_of = |b: usize, bit: bool| if bit { others[b] } else { reps[b] };
        let order = cov.total().group().order();
        let mut action = Vec::with_capacity(order);
        for g in 0..order {
            let mut map = vec![0usize; count];
            for m in 0..count as u64 {
                let mut img = 0u64;
                for b in 0..n {
                    let y = point_of(b, m >> b & 1 == 1);
                    let y2 = cov.total().apply(y, g);
                    let b2 = cov.pi()[y2];
                    if y2 == others[b2] {
                        img |= 1 << b2;
                    }
                }
                map[m as usize] = img as usize;
            }
            action.push(Perm::from_images(map)?);
        }
        let gset = GSet::new(cov.total().group().clone(), count, action)?;
        let full = (count - 1) as u64;
        let complement = Perm::from_images(
            (0..count as u64).map(|m| (!m & full) as usize).collect(),
        )?;
        // two sections lie in the same class iff |intersection| = n mod 2,
        // i.e. iff their masks differ in an even number of fibers
        let class_of: Vec<u8> = (0..count as u64)
            .map(|m| (m.count_ones() % 2) as u8)
            .collect();
        // sign law: a group element swaps the classes iff it is odd on Y
        let delta_swaps: Vec<bool> = (0..order)
            .map(|g| !cov.total().action_of(g).is_even())
            .collect();
        let cs = CliffordSet {
            covering: cov.clone(),
            reps,
            others,
            gset,
            complement,
            class_of,
            delta_swaps,
        };
        cs.check_consistency()?;
        Ok(cs)
    }

    fn check_consistency(&self) -> Result<()> {
        let count = self.gset.size();
        let order = self.gset.group().order();
        // complement is a fixed-point-free equivariant involution
        for m in 0..count {
            let c = self.complement.apply(m);
            if c == m || self.complement.apply(c) != m {
                return Err(Error::Internal("complement is not a free involution".into()));
            }
        }
        for g in 0..order {
            let a = self.gset.action_of(g);
            if a.then(&self.complement) != self.complement.then(a) {
                return Err(Error::Internal("complement is not equivariant".into()));
            }
            // delta equivariance against the sign law
            let swap = self.delta_swaps[g];
            for m in 0..count {
                let expect = self.class_of[m] ^ (swap as u8);
                if self.class_of[self.gset.apply(m, g)] != expect {
                    return Err(Error::Internal(
                        "class action disagrees with the sign of the Y-permutation".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    pub fn n(&self) -> usize {
        self.covering.base_size()
    }

    pub fn len(&self) -> usize {
        self.gset.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn complement(&self) -> &Perm {
        &self.complement
    }

    pub fn class_of(&self, mask: usize) -> u8 {
        self.class_of[mask]
    }

    pub fn delta_swaps(&self, g: usize) -> bool {
        self.delta_swaps[g]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// The points of the section with the given mask, sorted.
    pub fn section_points(&self, mask: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.n())
            .map(|b| if mask >> b & 1 == 1 { self.others[b] } else { self.reps[b] })
            .collect();
        pts.sort_unstable();
        pts
    }

    /// Mask of the section with the given point set, if it is a section.
    pub fn mask_of_points(&self, points: &[usize]) -> Option<usize> {
        if points.len() != self.n() {
            return None;
        }
        let mut mask = 0usize;
        let mut hit = vec![false; self.n()];
        for &y in points {
            let b = self.covering.pi()[y];
            if hit[b] {
                return None;
            }
            hit[b] = true;
            if y == self.others[b] {
                mask |= 1 << b;
            }
        }
        Some(mask)
    }

    pub fn discriminant(&self) -> Discriminant {
        let mut classes = [Vec::new(), Vec::new()];
        for m in 0..self.len() {
            classes[self.class_of[m] as usize].push(m);
        }
        Discriminant {
            classes,
            swaps: self.delta_swaps.clone(),
        }
    }
}

/// The two-block partition of the Clifford set together with the induced
/// action on the pair of blocks (per group element: does it swap them).
#[derive(Debug, Clone)]
pub struct Discriminant {
    pub classes: [Vec<usize>; 2],
    pub swaps: Vec<bool>,
}

impl Discriminant {
    pub fn is_orientable(&self) -> bool {
        self.swaps.iter().all(|&s| !s)
    }
}

/// A double covering whose discriminant classes carry fixed labels 1 and 2.
/// `anchor_label` is the label of the class of the all-representatives
/// section (mask 0).
#[derive(Debug, Clone)]
pub struct OrientedCovering {
    clifford: CliffordSet,
    anchor_label: u8,
}

impl OrientedCovering {
    /// None when the covering is not orientable. Default labeling puts the
    /// anchor section in class 1; `label` overrides.
    pub fn orient(cov: &Covering, label: Option<u8>) -> Result<Option<OrientedCovering>> {
        let clifford = CliffordSet::new(cov)?;
        Self::orient_clifford(clifford, label)
    }

    pub fn orient_clifford(
        clifford: CliffordSet,
        label: Option<u8>,
    ) -> Result<Option<OrientedCovering>> {
        let anchor_label = match label {
            None => 1,
            Some(l @ (1 | 2)) => l,
            Some(_) => return Err(Error::BadOrientationLabel),
        };
        if !clifford.discriminant().is_orientable() {
            return Ok(None);
        }
        Ok(Some(OrientedCovering { clifford, anchor_label }))
    }

    pub fn clifford(&self) -> &CliffordSet {
        &self.clifford
    }

    pub fn covering(&self) -> &Covering {
        self.clifford.covering()
    }

    pub fn n(&self) -> usize {
        self.clifford.n()
    }

    pub fn anchor_label(&self) -> u8 {
        self.anchor_label
    }

    /// Label (1 or 2) of the section with the given mask.
    pub fn class_label(&self, mask: usize) -> u8 {
        if self.clifford.class_of(mask) == 0 {
            self.anchor_label
        } else {
            3 - self.anchor_label
        }
    }

    pub fn opposite(&self) -> OrientedCovering {
        OrientedCovering {
            clifford: self.clifford.clone(),
            anchor_label: 3 - self.anchor_label,
        }
    }
}

/// The canonical bijection C(Y/Y0) x C(Z/Z0) -> C(Y u Z / Y0 u Z0) sending
/// a pair of sections to their disjoint union.
pub struct CliffordProduct {
    pub left: CliffordSet,
    pub right: CliffordSet,
    pub union: Covering,
    pub union_clifford: CliffordSet,
    pub map: GMap,
}

pub fn clifford_product_iso(cov1: &Covering, cov2: &Covering) -> Result<CliffordProduct> {
    if !cov1.total().same_group(cov2.total()) {
        return Err(Error::GroupMismatch);
    }
    let left = CliffordSet::new(cov1)?;
    let right = CliffordSet::new(cov2)?;
    let total = cov1.total().disjoint_union(cov2.total())?;
    let n1 = cov1.base_size();
    let mut pi = cov1.pi().to_vec();
    pi.extend(cov2.pi().iter().map(|&b| b + n1));
    let union = Covering::from_total(total, pi)?;
    let union_clifford = CliffordSet::new(&union)?;
    let product = left.gset().product(right.gset())?;
    let s2 = right.len();
    let map: Vec<usize> = (0..product.size())
        .map(|p| {
            let (m1, m2) = (p / s2, p % s2);
            m1 | (m2 << n1)
        })
        .collect();
    let map = GMap::new(product, union_clifford.gset().clone(), map)?;
    Ok(CliffordProduct { left, right, union, union_clifford, map })
}

/// An isomorphism of coverings: an equivariant bijection of total spaces
/// that descends to the bases.
#[derive(Debug, Clone)]
pub struct CoveringIso {
    pub total_map: GMap,
    pub base_map: GMap,
}

/// Searches for an isomorphism of coverings, optionally constrained by a
/// predicate on the completed total-space map (used for orientations).
fn search_covering_iso(
    a: &Covering,
    b: &Covering,
    accept: &dyn Fn(&[usize]) -> bool,
) -> Result<Option<CoveringIso>> {
    if !a.total().same_group(b.total()) {
        return Err(Error::GroupMismatch);
    }
    if a.total().size() != b.total().size()
        || a.base_size() != b.base_size()
        || a.degree() != b.degree()
    {
        return Ok(None);
    }
    let x = a.total();
    let y = b.total();
    let xo = x.orbits();
    let yo = y.orbits();
    if xo.len() != yo.len() {
        return Ok(None);
    }
    let fp = |s: &GSet, o: &[usize]| (o.len(), s.stabilizer_order(o[0]));
    let xfp: Vec<_> = xo.iter().map(|o| fp(x, o)).collect();
    let yfp: Vec<_> = yo.iter().map(|o| fp(y, o)).collect();
    let mut map = vec![usize::MAX; x.size()];
    let mut used = vec![false; yo.len()];
    let mut base_map = vec![usize::MAX; a.base_size()];
    let mut base_hits = vec![0usize; a.base_size()];

    struct Ctx<'c> {
        a: &'c Covering,
        b: &'c Covering,
        xo: &'c [Vec<usize>],
        yo: &'c [Vec<usize>],
        xfp: &'c [(usize, usize)],
        yfp: &'c [(usize, usize)],
        accept: &'c dyn Fn(&[usize]) -> bool,
    }

    fn rec(
        ctx: &Ctx,
        i: usize,
        used: &mut [bool],
        map: &mut [usize],
        base_map: &mut [usize],
        base_hits: &mut [usize],
    ) -> bool {
        let (x, y) = (ctx.a.total(), ctx.b.total());
        if i == ctx.xo.len() {
            return (ctx.accept)(map);
        }
        let base_pt = ctx.xo[i][0];
        let stab: Vec<usize> = (0..x.group().order())
            .filter(|&g| x.apply(base_pt, g) == base_pt)
            .collect();
        for j in 0..ctx.yo.len() {
            if used[j] || ctx.yfp[j] != ctx.xfp[i] {
                continue;
            }
            'cand: for &cand in &ctx.yo[j] {
                if !stab.iter().all(|&g| y.apply(cand, g) == cand) {
                    continue;
                }
                for &p in &ctx.xo[i] {
                    map[p] = usize::MAX;
                }
                let mut touched: Vec<usize> = Vec::new();
                let mut ok = true;
                for g in 0..x.group().order() {
                    let from = x.apply(base_pt, g);
                    let to = y.apply(cand, g);
                    if map[from] == usize::MAX {
                        map[from] = to;
                        // fiber consistency: the base map must be a
                        // well-defined injection
                        let bf = ctx.a.pi()[from];
                        let bt = ctx.b.pi()[to];
                        if base_map[bf] == usize::MAX {
                            if base_hits.iter().enumerate().any(|(b2, &h)| {
                                h > 0 && base_map[b2] == bt
                            }) {
                                ok = false;
                            }
                            base_map[bf] = bt;
                        } else if base_map[bf] != bt {
                            ok = false;
                        }
                        base_hits[bf] += 1;
                        touched.push(bf);
                        if !ok {
                            break;
                        }
                    } else if map[from] != to {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    used[j] = true;
                    if rec(ctx, i + 1, used, map, base_map, base_hits) {
                        return true;
                    }
                    used[j] = false;
                }
                for &bf in &touched {
                    base_hits[bf] -= 1;
                    if base_hits[bf] == 0 {
                        base_map[bf] = usize::MAX;
                    }
                }
                for &p in &ctx.xo[i] {
                    map[p] = usize::MAX;
                }
                continue 'cand;
            }
        }
        false
    }

    let ctx = Ctx { a, b, xo: &xo, yo: &yo, xfp: &xfp, yfp: &yfp, accept };
    if rec(&ctx, 0, &mut used, &mut map, &mut base_map, &mut base_hits) {
        let total_map = GMap::new(x.clone(), y.clone(), map)?;
        let bmap: Vec<usize> = (0..a.base_size())
            .map(|bf| b.pi()[total_map.map[a.fiber(bf)[0]]])
            .collect();
        let base_map = GMap::new(a.base().clone(), b.base().clone(), bmap)?;
        Ok(Some(CoveringIso { total_map, base_map }))
    } else {
        Ok(None)
    }
}

pub fn iso_coverings(a: &Covering, b: &Covering) -> Result<Option<CoveringIso>> {
    search_covering_iso(a, b, &|_| true)
}

/// Isomorphism of oriented coverings: a covering isomorphism whose induced
/// map on sections carries class label 1 to class label 1.
pub fn iso_oriented(a: &OrientedCovering, b: &OrientedCovering) -> Result<Option<CoveringIso>> {
    let ca = a.clifford();
    let cb = b.clifford();
    let accept = |map: &[usize]| -> bool {
        // image of the anchor section under the candidate bijection
        let pts: Vec<usize> = ca.section_points(0).iter().map(|&p| map[p]).collect();
        match cb.mask_of_points(&pts) {
            Some(m) => b.class_label(m) == a.class_label(0),
            None => false,
        }
    };
    search_covering_iso(a.covering(), b.covering(), &accept)
}

/// One covering representative per isomorphism class of double coverings
/// with base size n, via homomorphism classification into the
/// hyperoctahedral group acting on the 2n interleaved points.
pub fn classify_coverings(group: &Arc<FiniteGroup>, n: usize) -> Result<Vec<Covering>> {
    if n == 0 {
        return Err(Error::EmptyBase);
    }
    let homs = enumerate_homs_up_to_conjugacy(group, n, Target::Hyperoctahedral)?;
    let pairing = Perm::from_images(
        (0..2 * n).map(|x| x ^ 1).collect(),
    )?;
    homs.into_iter()
        .map(|h| {
            let total = if group.generators().is_empty() {
                GSet::trivial(group.clone(), 2 * n)
            } else {
                GSet::from_generator_images(group.clone(), 2 * n, h.images)?
            };
            let inv = Involution::new(total, pairing.clone())?;
            covering_from_involution(&inv)
        })
        .collect()
}

/// The split double covering of base size n: trivial group on 2n points,
/// sigma = i <-> i+n, base 0..n-1 in order.
pub fn split_covering(n: usize) -> Result<Covering> {
    let group = FiniteGroup::trivial();
    let total = GSet::trivial(group, 2 * n);
    let pi: Vec<usize> = (0..2 * n).map(|x| x % n).collect();
    Covering::from_total(total, pi)
}
