//! V^⊗k and V^⊗(k+½) as exact modules for rook elements (left) and
//! totally propagating diagrams (right), with the Schur–Weyl checks.
//!
//! `phi_*` returns Φ with Φ[I][I'] the coefficient of e_{I'} in e_I·d, so
//! Φ(d₁d₂) = Φ(d₁)Φ(d₂). As an operator on column vectors the action is Φᵀ;
//! `psi_*` matrices already act on column vectors.

use serde::Serialize;

use crate::diagram::{enumerate_monoid, from_orbit, AlgebraElement, Basis, MonoidKind, PartitionDiagram};
use crate::error::{Error, Result};
use crate::matrix::{commutant_dimension, Echelon, ExactMatrix, SparseRow};
use crate::rook::{enumerate_rook, generator, GeneratorKind, RookAlgebraElement, RookElement};
use crate::scalar::rat;

pub const MAX_TENSOR_DIM: usize = 729;

/// (ℂⁿ)^⊗k, or V^⊗k ⊗ e_n when `half` is set.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TensorSpace {
    pub n: usize,
    pub k: usize,
    pub half: bool,
}

impl TensorSpace {
    pub fn new(n: usize, k: usize, half: bool) -> Result<Self> {
        if n == 0 || (k == 0 && !half) {
            return Err(Error::InvalidInput(format!("n={n}, k={k}")));
        }
        let s = TensorSpace { n, k, half };
        match n.checked_pow(k as u32) {
            Some(d) if d <= MAX_TENSOR_DIM => Ok(s),
            _ => Err(Error::GuardExceeded(format!("{n}^{k} exceeds {MAX_TENSOR_DIM}"))),
        }
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    /// Diagram size acting on this space.
    pub fn diagram_k(&self) -> usize {
        self.k + usize::from(self.half)
    }

    /// Rook monoid size acting on this space.
    pub fn rook_n(&self) -> usize {
        self.n - usize::from(self.half)
    }

    /// 0-based letters, slot 1 most significant.
    pub fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for slot in (0..self.k).rev() {
            t[slot] = idx % self.n;
            idx /= self.n;
        }
        t
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t[..self.k].iter().fold(0, |acc, &x| acc * self.n + x)
    }

    fn full_tuple(&self, idx: usize) -> Vec<usize> {
        let mut t = self.tuple(idx);
        if self.half {
            t.push(self.n - 1);
        }
        t
    }

    fn check_diagram(&self, d: &PartitionDiagram) -> Result<()> {
        if d.k() != self.diagram_k() {
            return Err(Error::SizeMismatch {
                expected: self.diagram_k(),
                found: d.k(),
            });
        }
        if self.half && d.top(d.k()) != d.bottom(d.k()) {
            return Err(Error::InvalidInput(format!("{d} does not join k+1 and (k+1)'")));
        }
        Ok(())
    }
}

/// Bottom labelings compatible with a top labeling.
fn bottom_fillings(d: &PartitionDiagram, top: &[usize], n: usize, orbit: bool) -> Vec<Vec<usize>> {
    let k = d.k();
    let mut val: Vec<Option<usize>> = vec![None; d.num_blocks()];
    for (j, &x) in top.iter().enumerate() {
        let b = d.top(j + 1) as usize;
        match val[b] {
            Some(y) if y != x => return Vec::new(),
            _ => val[b] = Some(x),
        }
    }
    if orbit {
        let mut used: Vec<usize> = val.iter().flatten().copied().collect();
        let m = used.len();
        used.sort_unstable();
        used.dedup();
        if used.len() != m {
            return Vec::new();
        }
    }
    let free: Vec<usize> = (0..val.len()).filter(|&b| val[b].is_none()).collect();
    let mut out = Vec::new();
    let mut assign = val.clone();
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        free: &[usize],
        assign: &mut Vec<Option<usize>>,
        n: usize,
        orbit: bool,
        d: &PartitionDiagram,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == free.len() {
            out.push((1..=k).map(|j| assign[d.bottom(j) as usize].unwrap()).collect());
            return;
        }
        for x in 0..n {
            if orbit && assign.contains(&Some(x)) {
                continue;
            }
            assign[free[i]] = Some(x);
            go(i + 1, free, assign, n, orbit, d, k, out);
            assign[free[i]] = None;
        }
    }
    go(0, &free, &mut assign, n, orbit, d, k, &mut out);
    out
}

fn phi_pattern(d: &PartitionDiagram, space: &TensorSpace, orbit: bool) -> Result<ExactMatrix> {
    space.check_diagram(d)?;
    let dim = space.dim();
    let mut m = ExactMatrix::zeros(dim, dim);
    for i in 0..dim {
        let top = space.full_tuple(i);
        for bottom in bottom_fillings(d, &top, space.n, orbit) {
            m.set(i, space.index(&bottom), rat(1));
        }
    }
    Ok(m)
}

/// Diagram basis: e_I·d has coefficient 1 on e_{I'} when the labeling is constant on blocks.
pub fn phi_diagram(d: &PartitionDiagram, space: &TensorSpace) -> Result<ExactMatrix> {
    phi_pattern(d, space, false)
}

/// Orbit basis: constant on blocks and distinct across blocks.
pub fn phi_orbit(d: &PartitionDiagram, space: &TensorSpace) -> Result<ExactMatrix> {
    phi_pattern(d, space, true)
}

/// Φ of a combination, with ξ evaluated at n.
pub fn phi(a: &AlgebraElement, space: &TensorSpace) -> Result<ExactMatrix> {
    if a.k() != space.diagram_k() {
        return Err(Error::SizeMismatch {
            expected: space.diagram_k(),
            found: a.k(),
        });
    }
    let xi = rat(space.n as i64);
    let dim = space.dim();
    let mut out = ExactMatrix::zeros(dim, dim);
    for (d, c) in a.sum().iter() {
        let m = match a.basis() {
            Basis::Diagram => phi_diagram(d, space)?,
            Basis::Orbit => phi_orbit(d, space)?,
        };
        out = out.add(&m.scale(&c.eval(&xi)))?;
    }
    Ok(out)
}

/// The action as an operator on column vectors.
pub fn phi_operator(a: &AlgebraElement, space: &TensorSpace) -> Result<ExactMatrix> {
    Ok(phi(a, space)?.transpose())
}

/// ρ(e_{i₁}⊗…⊗e_{i_k}) = e_{ρ(i₁)}⊗…, zero if any letter is killed.
pub fn psi_rook(rho: &RookElement, space: &TensorSpace) -> Result<ExactMatrix> {
    if rho.n() != space.rook_n() {
        return Err(Error::SizeMismatch {
            expected: space.rook_n(),
            found: rho.n(),
        });
    }
    let full = if space.half { rho.extend() } else { rho.clone() };
    let dim = space.dim();
    let mut m = ExactMatrix::zeros(dim, dim);
    for i in 0..dim {
        let t: Option<Vec<usize>> = space
            .tuple(i)
            .iter()
            .map(|&x| full.apply(x + 1).map(|y| y - 1))
            .collect();
        if let Some(t) = t {
            m.set(space.index(&t), i, rat(1));
        }
    }
    Ok(m)
}

pub fn psi(a: &RookAlgebraElement, space: &TensorSpace) -> Result<ExactMatrix> {
    let dim = space.dim();
    let mut out = ExactMatrix::zeros(dim, dim);
    for (rho, c) in a.sum().iter() {
        out = out.add(&psi_rook(rho, space)?.scale(c))?;
    }
    Ok(out)
}

/// ψ of s_1..s_{m-1} and P_1 for the acting R_m; the identity when m = 0.
pub fn psi_generators(space: &TensorSpace) -> Result<Vec<ExactMatrix>> {
    let m = space.rook_n();
    if m == 0 {
        return Ok(vec![ExactMatrix::identity(space.dim())]);
    }
    let mut gens = Vec::new();
    for i in 1..m {
        gens.push(psi_rook(&generator(GeneratorKind::S, i, m)?, space)?);
    }
    gens.push(psi_rook(&generator(GeneratorKind::P, 1, m)?, space)?);
    Ok(gens)
}

fn flatten(m: &ExactMatrix) -> SparseRow {
    m.support()
        .into_iter()
        .map(|(i, j)| (i * m.cols() + j, m.get(i, j).clone()))
        .collect()
}

fn span_rank(ms: impl IntoIterator<Item = ExactMatrix>, dim: usize) -> usize {
    let mut e = Echelon::new(dim * dim);
    for m in ms {
        e.insert(flatten(&m));
    }
    e.rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurWeylReport {
    pub n: usize,
    pub k: usize,
    pub half: bool,
    pub algebra_dim: usize,
    pub kernel_dim: usize,
    pub expected_kernel_dim: usize,
    pub image_dim: usize,
    pub commutant_dim: usize,
    pub rook_span_dim: usize,
    pub diagram_commutant_dim: usize,
    pub ok: bool,
}

/// Kernel and image of the diagram action against the rook commutant, both ways.
pub fn schur_weyl_report(n: usize, k: usize, half: bool) -> Result<SchurWeylReport> {
    let space = TensorSpace::new(n, k, half)?;
    let dim = space.dim();
    let kind = if half {
        MonoidKind::HalfTotallyPropagating
    } else {
        MonoidKind::TotallyPropagating
    };
    let diagrams = enumerate_monoid(kind, k)?;
    let expected_kernel_dim = diagrams.iter().filter(|d| d.num_blocks() > n).count();
    let images: Vec<ExactMatrix> = diagrams.iter().map(|d| phi_orbit(d, &space)).collect::<Result<_>>()?;
    let image_dim = span_rank(images.iter().cloned(), dim);
    let kernel_dim = diagrams.len() - image_dim;
    let commutant_dim = commutant_dimension(&psi_generators(&space)?)?;
    let operators: Vec<ExactMatrix> = images.iter().map(ExactMatrix::transpose).collect();
    let diagram_commutant_dim = commutant_dimension(&operators)?;
    let rook_span_dim = span_rank(
        enumerate_rook(space.rook_n())
            .iter()
            .map(|r| psi_rook(r, &space))
            .collect::<Result<Vec<_>>>()?,
        dim,
    );
    Ok(SchurWeylReport {
        n,
        k,
        half,
        algebra_dim: diagrams.len(),
        kernel_dim,
        expected_kernel_dim,
        image_dim,
        commutant_dim,
        rook_span_dim,
        diagram_commutant_dim,
        ok: kernel_dim == expected_kernel_dim && image_dim == commutant_dim && rook_span_dim == diagram_commutant_dim,
    })
}

/// Φ(x_d) against Φ(from_orbit(x_d)); used by the tests and the verify suite.
pub fn orbit_matches_diagram(d: &PartitionDiagram, space: &TensorSpace) -> Result<bool> {
    let x = AlgebraElement::basis_element(d.clone(), Basis::Orbit);
    Ok(phi_orbit(d, space)? == phi(&from_orbit(&x), space)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(k: usize, s: &str) -> PartitionDiagram {
        let blocks: Vec<Vec<i64>> = serde_json::from_str(s).unwrap();
        PartitionDiagram::from_blocks(k, &blocks).unwrap()
    }

    #[test]
    fn phi_examples() {
        let s1 = TensorSpace::new(3, 1, false).unwrap();
        assert_eq!(
            phi_diagram(&PartitionDiagram::identity(1), &s1).unwrap(),
            ExactMatrix::identity(3)
        );
        let s2 = TensorSpace::new(2, 2, false).unwrap();
        let swap = pd(2, "[[1,-2],[2,-1]]");
        let m = phi_diagram(&swap, &s2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(*m.get(s2.index(&[i, j]), s2.index(&[j, i])), rat(1));
            }
        }
        let o = phi_orbit(&swap, &s2).unwrap();
        assert!(*o.get(0, 0) == rat(0) && *o.get(1, 2) == rat(1));
        let all = phi_diagram(&pd(2, "[[1,2,-1,-2]]"), &s2).unwrap();
        assert_eq!(all.support(), vec![(0, 0), (3, 3)]);
    }

    #[test]
    fn orbit_kernel_when_too_many_blocks() {
        let s = TensorSpace::new(1, 2, false).unwrap();
        assert!(phi_orbit(&PartitionDiagram::identity(2), &s).unwrap().is_zero());
    }

    #[test]
    fn psi_examples() {
        let s = TensorSpace::new(2, 2, false).unwrap();
        let p1 = generator(GeneratorKind::P, 1, 2).unwrap();
        let m = psi_rook(&p1, &s).unwrap();
        assert!(m.column(s.index(&[0, 1])).iter().all(|x| x == &rat(0)));
        let s1 = TensorSpace::new(2, 1, false).unwrap();
        let flip = psi_rook(&generator(GeneratorKind::S, 1, 2).unwrap(), &s1).unwrap();
        assert_eq!(flip, ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap());
    }

    #[test]
    fn homomorphism_and_commuting() {
        for n in [2, 3] {
            let s = TensorSpace::new(n, 2, false).unwrap();
            let a2 = enumerate_monoid(MonoidKind::Partition, 2).unwrap();
            for d1 in &a2 {
                for d2 in &a2 {
                    let x = AlgebraElement::basis_element(d1.clone(), Basis::Diagram);
                    let y = AlgebraElement::basis_element(d2.clone(), Basis::Diagram);
                    let prod = phi(&x.mul(&y).unwrap(), &s).unwrap();
                    assert_eq!(phi(&x, &s).unwrap().mul(&phi(&y, &s).unwrap()).unwrap(), prod);
                }
                assert!(orbit_matches_diagram(d1, &s).unwrap());
            }
            let gens = psi_generators(&s).unwrap();
            for d in enumerate_monoid(MonoidKind::TotallyPropagating, 2).unwrap() {
                let op = phi_diagram(&d, &s).unwrap().transpose();
                for g in &gens {
                    assert_eq!(op.mul(g).unwrap(), g.mul(&op).unwrap());
                }
            }
        }
    }

    #[test]
    fn reports() {
        let r = schur_weyl_report(3, 2, false).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!((r.kernel_dim, r.image_dim), (0, 3));
        let r = schur_weyl_report(2, 3, false).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.kernel_dim, 6);
        let r = schur_weyl_report(2, 1, true).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.image_dim, 2);
    }
}
