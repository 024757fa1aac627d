//! Exact realization of the split etale algebra side: function algebras on
//! finite sets, the fat-diagonal idempotent, the Clifford algebra of a
//! split double covering and its canonical linear map, cross-checked
//! against the combinatorial Clifford set.
//!
//! All constructions are generic over the field scalar; the shipped
//! instantiation is [`crate::Rat`]. Tensor powers are materialized as
//! coordinate vectors over tuple indices, which bounds the base size.



use crate::covering::{clifford_product_iso, CliffordSet, Covering};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, SpanBuilder};
use crate::scalar::Scalar;

/// Largest base size whose n-th tensor power is materialized ((2n)^n
/// coordinates; 8^4 = 4096 at the limit).
pub const MAX_TENSOR_BASE: usize = 4;

/// The split etale algebra of rational-valued functions on a finite set:
/// product pointwise, unit the constant 1, the coordinate indicators being
/// the primitive idempotents.
#[derive(Debug, Clone)]
pub struct SplitEtaleAlgebra {
    dim: usize,
}

impl SplitEtaleAlgebra {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(SplitEtaleAlgebra { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit<S: Scalar>(&self) -> Vec<S> {
        vec![S::one(); self.dim]
    }

    pub fn indicator<S: Scalar>(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }

    pub fn mul<S: Scalar>(&self, a: &[S], b: &[S]) -> Vec<S> {
        a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect()
    }
}

/// The characteristic function of the injective n-tuples inside the n-th
/// tensor power of an m0-dimensional split algebra, as a coordinate vector
/// over the m0^n tuples in lexicographic order (first factor most
/// significant). Requires n = m0.
pub fn fat_diagonal_idempotent<S: Scalar>(m0: usize, n: usize) -> Result<Vec<S>> {
    if m0 == 0 {
        return Err(Error::EmptyDomain);
    }
    if n != m0 {
        return Err(Error::FatDiagonalShape { m0, n });
    }
    if m0 > 2 * MAX_TENSOR_BASE {
        return Err(Error::TensorSizeLimit { n: m0, limit: 2 * MAX_TENSOR_BASE });
    }
    let total = m0.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for t in 0..total {
        let tuple = decode_tuple(t, m0, n);
        let mut seen = vec![false; m0];
        let injective = tuple.iter().all(|&c| {
            if seen[c] {
                false
            } else {
                seen[c] = true;
                true
            }
        });
        out.push(if injective { S::one() } else { S::zero() });
    }
    Ok(out)
}

fn decode_tuple(mut t: usize, radix: usize, n: usize) -> Vec<usize> {
    let mut tuple = vec![0; n];
    for i in (0..n).rev() {
        tuple[i] = t % radix;
        t /= radix;
    }
    tuple
}

/// The Clifford algebra of a split double covering (trivial group, base
/// size n): the Sym_n-invariant functions on Y^n supported on tuples with
/// pairwise distinct fiber images. Its primitive idempotents biject with
/// the 2^n sections, which is the section basis used throughout.
pub struct CliffordAlgebraSplit<S> {
    clifford: CliffordSet,
    n: usize,
    y_size: usize,
    tensor_dim: usize,
    /// the idempotent pulled back along pi: 1 on tuples with pairwise
    /// distinct fiber images
    idempotent: Vec<S>,
    /// section mask of each tuple in the support, None off the support
    section_of_tuple: Vec<Option<usize>>,
}

impl<S: Scalar> CliffordAlgebraSplit<S> {
    pub fn new(cov: &Covering) -> Result<Self> {
        if !cov.total().group().is_trivial() {
            return Err(Error::NontrivialGroup);
        }
        let clifford = CliffordSet::new(cov)?;
        let n = clifford.n();
        if n > MAX_TENSOR_BASE {
            return Err(Error::TensorSizeLimit { n, limit: MAX_TENSOR_BASE });
        }
        let y_size = cov.total().size();
        let tensor_dim = y_size.pow(n as u32);
        let mut idempotent = Vec::with_capacity(tensor_dim);
        let mut section_of_tuple = Vec::with_capacity(tensor_dim);
        for t in 0..tensor_dim {
            let tuple = decode_tuple(t, y_size, n);
            let mut hit = vec![false; n];
            let distinct = tuple.iter().all(|&y| {
                let b = cov.pi()[y];
                if hit[b] {
                    false
                } else {
                    hit[b] = true;
                    true
                }
            });
            if distinct {
                let mut pts = tuple.clone();
                pts.sort_unstable();
                section_of_tuple.push(clifford.mask_of_points(&pts));
                idempotent.push(S::one());
            } else {
                section_of_tuple.push(None);
                idempotent.push(S::zero());
            }
        }
        Ok(CliffordAlgebraSplit {
            clifford,
            n,
            y_size,
            tensor_dim,
            idempotent,
            section_of_tuple,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn clifford_set(&self) -> &CliffordSet {
        &self.clifford
    }

    pub fn covering(&self) -> &Covering {
        self.clifford.covering()
    }

    /// The basis idempotent attached to a section, as a tensor vector.
    pub fn section_basis_tensor(&self, mask: usize) -> Vec<S> {
        (0..self.tensor_dim)
            .map(|t| {
                if self.section_of_tuple[t] == Some(mask) {
                    S::one()
                } else {
                    S::zero()
                }
            })
            .collect()
    }

    /// Projects an invariant tensor supported on the idempotent onto
    /// section coordinates; errors if it is not constant on the tuples of
    /// a section (i.e. not Sym_n-invariant).
    pub fn tensor_to_sections(&self, tensor: &[S]) -> Result<Vec<S>> {
        if tensor.len() != self.tensor_dim {
            return Err(Error::DimensionMismatch {
                expected: self.tensor_dim,
                got: tensor.len(),
            });
        }
        let mut out: Vec<Option<S>> = vec![None; self.dim()];
        for t in 0..self.tensor_dim {
            match self.section_of_tuple[t] {
                Some(m) => match &out[m] {
                    None => out[m] = Some(tensor[t].clone()),
                    Some(v) => {
                        if *v != tensor[t] {
                            return Err(Error::Internal(
                                "tensor is not Sym_n-invariant on the support".into(),
                            ));
                        }
                    }
                },
                None => {
                    if !tensor[t].is_zero() {
                        return Err(Error::Internal(
                            "tensor is not supported on the idempotent".into(),
                        ));
                    }
                }
            }
        }
        Ok(out.into_iter().map(|v| v.expect("every section is hit")).collect())
    }

    /// The canonical linear map c_L in section coordinates, computed by the
    /// full tensor expansion and checked against the closed form
    /// c_L(x)(section) = sum of x over the section's points.
    pub fn c_map(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.y_size {
            return Err(Error::DimensionMismatch {
                expected: self.y_size,
                got: x.len(),
            });
        }
        let mut tensor = vec![S::zero(); self.tensor_dim];
        for t in 0..self.tensor_dim {
            if self.idempotent[t].is_zero() {
                continue;
            }
            let tuple = decode_tuple(t, self.y_size, self.n);
            let mut sum = S::zero();
            for &y in &tuple {
                sum = sum + x[y].clone();
            }
            tensor[t] = sum;
        }
        let by_tensor = self.tensor_to_sections(&tensor)?;
        let by_closed_form: Vec<S> = (0..self.dim())
            .map(|m| {
                self.clifford
                    .section_points(m)
                    .iter()
                    .fold(S::zero(), |acc, &y| acc + x[y].clone())
            })
            .collect();
        if by_tensor != by_closed_form {
            return Err(Error::Internal(
                "closed form for c_L disagrees with the tensor expansion".into(),
            ));
        }
        Ok(by_tensor)
    }

    pub fn mul_sections(&self, a: &[S], b: &[S]) -> Vec<S> {
        a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect()
    }

    /// Kernel of c_L versus the trace-zero subspace of the base algebra
    /// pulled back along pi.
    pub fn kernel_check(&self) -> Result<KernelReport<S>> {
        // rows: one per section, entries 1 at the section's points
        let rows: Vec<Vec<S>> = (0..self.dim())
            .map(|m| {
                let pts = self.clifford.section_points(m);
                (0..self.y_size)
                    .map(|y| if pts.contains(&y) { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        let kernel = kernel_basis(&rows, self.y_size);
        // trace-zero pullbacks: (indicator of fiber 0) - (indicator of fiber i)
        let pi = self.covering().pi();
        let trace_zero: Vec<Vec<S>> = (1..self.n)
            .map(|b| {
                (0..self.y_size)
                    .map(|y| {
                        if pi[y] == 0 {
                            S::one()
                        } else if pi[y] == b {
                            S::zero() - S::one()
                        } else {
                            S::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut span = SpanBuilder::new(self.y_size);
        for v in &kernel {
            span.insert(v);
        }
        let kernel_dim = span.dim();
        let contained = trace_zero.iter().all(|v| span.contains(v));
        let expected_dim = self.n - 1;
        let passed = kernel_dim == expected_dim && contained;
        Ok(KernelReport {
            kernel_basis: kernel,
            trace_zero_basis: trace_zero,
            kernel_dim,
            expected_dim,
            passed,
        })
    }

    /// Closes the image of c_L under products and spans; the image must
    /// generate the full 2^n-dimensional algebra.
    pub fn generation_check(&self) -> Result<GenerationReport> {
        let mut span = SpanBuilder::new(self.dim());
        for y in 0..self.y_size {
            let mut x = vec![S::zero(); self.y_size];
            x[y] = S::one();
            span.insert(&self.c_map(&x)?);
        }
        let mut rounds = 0;
        loop {
            let current: Vec<Vec<S>> = span.rows().to_vec();
            let mut grew = false;
            for a in &current {
                for b in &current {
                    if span.insert(&self.mul_sections(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            rounds += 1;
        }
        Ok(GenerationReport {
            reached_dim: span.dim(),
            expected_dim: self.dim(),
            rounds,
            passed: span.dim() == self.dim(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct KernelReport<S> {
    pub kernel_basis: Vec<Vec<S>>,
    pub trace_zero_basis: Vec<Vec<S>>,
    pub kernel_dim: usize,
    pub expected_dim: usize,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct GenerationReport {
    pub reached_dim: usize,
    pub expected_dim: usize,
    pub rounds: usize,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct ProductReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub union_dim: usize,
    pub checked_elements: usize,
    pub passed: bool,
}

/// Checks the product diagram: transporting c over the disjoint union
/// through the section-pairing isomorphism P agrees with
/// x |-> c(x) (x) 1 + 1 (x) c(y) on the factors, on every basis element of
/// L x M. Both sides are computed by their own tensor expansions.
pub fn product_compatibility_check<S: Scalar>(
    cov1: &Covering,
    cov2: &Covering,
) -> Result<ProductReport> {
    let a1: CliffordAlgebraSplit<S> = CliffordAlgebraSplit::new(cov1)?;
    let a2: CliffordAlgebraSplit<S> = CliffordAlgebraSplit::new(cov2)?;
    let prod = clifford_product_iso(cov1, cov2)?;
    let union: CliffordAlgebraSplit<S> = CliffordAlgebraSplit::new(&prod.union)?;
    let (n1, d1, d2) = (a1.n(), a1.dim(), a2.dim());
    let y1 = cov1.total().size();
    let y2 = cov2.total().size();
    let mut checked = 0;
    let mut passed = true;
    // basis of L x M: the point indicators of Y followed by those of Z,
    // plus the unit pair (the spec'd constants case)
    let mut pairs: Vec<(Vec<S>, Vec<S>)> = Vec::new();
    for y in 0..y1 {
        let mut x = vec![S::zero(); y1];
        x[y] = S::one();
        pairs.push((x, vec![S::zero(); y2]));
    }
    for z in 0..y2 {
        let mut y = vec![S::zero(); y2];
        y[z] = S::one();
        pairs.push((vec![S::zero(); y1], y));
    }
    pairs.push((vec![S::one(); y1], vec![S::one(); y2]));
    for (x, y) in &pairs {
        // left route: c over the union, transported through P
        let mut z = x.clone();
        z.extend(y.iter().cloned());
        let c_union = union.c_map(&z)?;
        // right route: c(x) (x) 1 + 1 (x) c(y) in the tensor product of the
        // factors, then compared through the pairing of section bases
        let cx = a1.c_map(x)?;
        let cy = a2.c_map(y)?;
        for m1 in 0..d1 {
            for m2 in 0..d2 {
                let union_mask = m1 | (m2 << n1);
                let rhs = cx[m1].clone() + cy[m2].clone();
                if c_union[union_mask] != rhs {
                    passed = false;
                }
                checked += 1;
            }
        }
    }
    Ok(ProductReport {
        left_dim: d1,
        right_dim: d2,
        union_dim: union.dim(),
        checked_elements: checked,
        passed,
    })
}
