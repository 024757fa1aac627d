//! Finite groups presented by generator permutations.
//!
//! A group is stored as its full element list (element 0 is the identity),
//! multiplication and inverse tables, and the faithful permutation
//! representation it was built from. Elements are numbered in breadth-first
//! discovery order from the identity, so construction is deterministic.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};

pub const DEFAULT_MAX_ORDER: usize = 48;

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    generators: Vec<usize>,
    /// For every non-identity element, a pair (parent element, generator
    /// index) with `element = parent * gen`. Used to extend maps defined on
    /// generators to the whole group.
    words: Vec<Option<(usize, usize)>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn from_generators(domain_size: usize, gens: Vec<Perm>) -> Result<Arc<Self>> {
        Self::from_generators_bounded(domain_size, gens, DEFAULT_MAX_ORDER)
    }

    pub fn from_generators_bounded(
        domain_size: usize,
        gens: Vec<Perm>,
        max_order: usize,
    ) -> Result<Arc<Self>> {
        if domain_size == 0 {
            return Err(Error::EmptyDomain);
        }
        for g in &gens {
            if g.degree() != domain_size {
                return Err(Error::DegreeMismatch(g.degree(), domain_size));
            }
        }
        let identity = Perm::identity(domain_size);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut words: Vec<Option<(usize, usize)>> = vec![None];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let next = elements[head].then(g);
                if !index.contains_key(&next) {
                    if elements.len() >= max_order {
                        return Err(Error::OrderLimit { limit: max_order });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    words.push(Some((head, gi)));
                }
            }
            head += 1;
        }
        let order = elements.len();
        let mut mult = vec![vec![0; order]; order];
        for x in 0..order {
            for y in 0..order {
                mult[x][y] = index[&elements[x].then(&elements[y])];
            }
        }
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = index[&elements[x].inverse()];
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(Arc::new(FiniteGroup {
            degree: domain_size,
            elements,
            mult,
            inv,
            generators,
            words,
        }))
    }

    pub fn trivial() -> Arc<Self> {
        Self::from_generators(1, vec![]).expect("trivial group")
    }

    /// Cyclic group of order n, acting on n points.
    pub fn cyclic(n: usize) -> Arc<Self> {
        let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let gens = if n == 1 {
            vec![]
        } else {
            vec![Perm::from_images(images).unwrap()]
        };
        Self::from_generators(n.max(1), gens).expect("cyclic group")
    }

    /// Symmetric group on n points.
    pub fn symmetric(n: usize) -> Arc<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles("(0 1)", n).unwrap());
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            gens.push(Perm::from_images(cycle).unwrap());
        }
        Self::from_generators_bounded(n.max(1), gens, 1 << 20).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn mult(&self, x: usize, y: usize) -> usize {
        self.mult[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn perm_of(&self, x: usize) -> &Perm {
        &self.elements[x]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mult(y, x);
            k += 1;
        }
        k
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..n {
                let y = self.mult(self.mult(self.inv(g), x), g);
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Extends a map on the generators to a total map on the group, using
    /// the stored word decomposition, then verifies the homomorphism
    /// property on every pair (element, generator). `compose` must be the
    /// image-side composition matching `then`.
    pub fn extend_hom<T, F, E>(&self, images: &[T], compose: F, eq: E) -> Option<Vec<T>>
    where
        T: Clone,
        F: Fn(&T, &T) -> T,
        E: Fn(&T, &T) -> bool,
    {
        assert_eq!(images.len(), self.generators.len());
        let mut phi: Vec<Option<T>> = vec![None; self.order()];
        // identity image: for the trivial generator-free group there is
        // nothing to anchor to, so the caller supplies T only via images;
        // build the identity as g * g^-1 when a generator exists.
        for x in 0..self.order() {
            match self.words[x] {
                None => {}
                Some((parent, gi)) => {
                    let p = phi[parent].clone().or_else(|| {
                        if parent == 0 {
                            None
                        } else {
                            unreachable!("BFS order guarantees parents are filled")
                        }
                    });
                    let img = match p {
                        Some(p) => compose(&p, &images[gi]),
                        None => images[gi].clone(), // parent is the identity
                    };
                    phi[x] = Some(img);
                }
            }
        }
        // identity: phi[0] = phi[g] composed with itself order-1 times, or
        // trivially absent when there are no generators. Compute it as
        // image(g)^order(g) for the first generator, else leave callers to
        // treat the trivial group specially.
        let id_img: T = if let Some(&g0) = self.generators.first() {
            let img = phi[g0].clone().unwrap();
            let mut acc = img.clone();
            for _ in 1..self.element_order(g0) {
                acc = compose(&acc, &img);
            }
            acc
        } else {
            // trivial group: no relations to check
            return Some(vec![]);
        };
        phi[0] = Some(id_img);
        let phi: Vec<T> = phi.into_iter().map(|p| p.unwrap()).collect();
        // homomorphism check on all (x, generator) pairs
        for x in 0..self.order() {
            for (gi, &g) in self.generators.iter().enumerate() {
                let lhs = &phi[self.mult(x, g)];
                let rhs = compose(&phi[x], &images[gi]);
                if !eq(lhs, &rhs) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

/// Classification target: Sym_n or the hyperoctahedral group
/// Sym_2^n ⋊ Sym_n acting on 2n interleaved points (fiber i is {2i, 2i+1}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Symmetric,
    Hyperoctahedral,
}

#[derive(Debug)]
pub struct TargetGroup {
    pub kind: Target,
    pub n: usize,
    pub degree: usize,
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl TargetGroup {
    pub fn new(kind: Target, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let (degree, elements) = match kind {
            Target::Symmetric => (n, all_perms(n)),
            Target::Hyperoctahedral => {
                // element = (signs, tau): point 2i+j goes to 2*tau(i) + (j xor sign_i)
                let mut out = Vec::new();
                for tau in all_perms(n) {
                    for signs in 0u64..(1 << n) {
                        let mut map = vec![0; 2 * n];
                        for i in 0..n {
                            let flip = ((signs >> i) & 1) as usize;
                            map[2 * i] = 2 * tau.apply(i) + flip;
                            map[2 * i + 1] = 2 * tau.apply(i) + (1 - flip);
                        }
                        out.push(Perm::from_images(map).unwrap());
                    }
                }
                out.sort();
                (2 * n, out)
            }
        };
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(TargetGroup { kind, n, degree, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }
}

/// A homomorphism G -> target, recorded by generator images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hom {
    pub images: Vec<Perm>,
}

fn encode(images: &[Perm]) -> Vec<usize> {
    let mut out = Vec::new();
    for p in images {
        out.extend_from_slice(p.images());
    }
    out
}

/// One representative per conjugacy class of homomorphisms G -> target,
/// each representative lexicographically least in its class under the
/// one-line encoding of the generator image tuple. Ordered by encoding.
pub fn enumerate_homs_up_to_conjugacy(
    group: &FiniteGroup,
    n: usize,
    kind: Target,
) -> Result<Vec<Hom>> {
    let target = TargetGroup::new(kind, n)?;
    let gens = group.generators();
    if gens.is_empty() {
        return Ok(vec![Hom { images: vec![] }]);
    }
    // candidate images per generator: order must divide the generator order
    let mut cands: Vec<Vec<&Perm>> = Vec::new();
    for &g in gens {
        let o = group.element_order(g);
        let c: Vec<&Perm> = target
            .elements
            .iter()
            .filter(|p| o % p.order() == 0)
            .collect();
        cands.push(c);
    }
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = Default::default();
    let mut stack: Vec<&Perm> = Vec::new();
    search_homs(group, &target, &cands, &mut stack, &mut seen, &mut reps);
    reps.sort();
    let gens_count = gens.len();
    let homs = reps
        .into_iter()
        .map(|enc| {
            let images = enc
                .chunks(enc.len() / gens_count)
                .map(|c| Perm::from_images(c.to_vec()).unwrap())
                .collect();
            Hom { images }
        })
        .collect();
    Ok(homs)
}

fn search_homs<'a>(
    group: &FiniteGroup,
    target: &TargetGroup,
    cands: &[Vec<&'a Perm>],
    stack: &mut Vec<&'a Perm>,
    seen: &mut std::collections::BTreeSet<Vec<usize>>,
    reps: &mut Vec<Vec<usize>>,
) {
    if stack.len() == cands.len() {
        let images: Vec<Perm> = stack.iter().map(|p| (*p).clone()).collect();
        if group
            .extend_hom(&images, |a, b| a.then(b), |a, b| a == b)
            .is_some()
        {
            // canonical form: least encoding over target conjugation
            let mut best = encode(&images);
            for t in &target.elements {
                let ti = t.inverse();
                let conj: Vec<Perm> = images.iter().map(|p| ti.then(p).then(t)).collect();
                let enc = encode(&conj);
                if enc < best {
                    best = enc;
                }
            }
            if seen.insert(best.clone()) {
                reps.push(best);
            }
        }
        return;
    }
    for p in &cands[stack.len()] {
        stack.push(p);
        search_homs(group, target, cands, stack, seen, reps);
        stack.pop();
    }
}
