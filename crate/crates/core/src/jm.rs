//! Jucys–Murphy elements of ℂI_t, their centrality, their action on tensor
//! space and the Gelfand–Tsetlin decomposition along Î.
//!
//! M_y lifts Z_y to ℂI_t along the tower. An integer level k sits in ℂI_{k+½}
//! through the unital inclusion d ↦ d ∪ {k+1,(k+1)'} on diagrams; the half
//! level k+½ sits in ℂI_{k+1} as the identity on diagrams.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bratteli::{ihat, GraphPath};
use crate::combinat::{binomial, content, f_lambda, set_partitions, SetPartition, YoungDiagram};
use crate::diagram::{
    build_dp, build_dpcd, build_dtilde, embed_half, enumerate_monoid, include_half, orbit_product_tppa, to_orbit,
    AlgebraElement, Basis, MonoidKind,
};
use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::level::Level;
use crate::matrix::{normalize_first, simultaneous_eigenspace, ExactMatrix};
use crate::rook::{kappa, kappa_tilde};
use crate::scalar::{rat, Poly, Rational};
use crate::tensor::{phi_operator, psi, TensorSpace};

/// Largest level accepted by the centrality check.
pub const MAX_CENTRALITY_LEVEL: Level = Level::half(3);

/// An orbit-basis element of ℂI_t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JMElement {
    pub level: Level,
    pub element: AlgebraElement,
}

impl JMElement {
    fn new(level: Level, element: AlgebraElement) -> Self {
        debug_assert_eq!(element.k(), level.diagram_size());
        debug_assert!(element.all_totally_propagating());
        JMElement { level, element }
    }

    fn zero(level: Level) -> Self {
        Self::new(level, AlgebraElement::zero(level.diagram_size(), Basis::Orbit))
    }

    fn one(level: Level) -> Self {
        Self::new(level, AlgebraElement::identity(level.diagram_size(), Basis::Orbit))
    }

    /// Image one step up the tower.
    pub fn lift(&self) -> Result<JMElement> {
        let element = if self.level.is_integer() {
            include_half(&self.element)?
        } else {
            self.element.clone()
        };
        Ok(JMElement::new(self.level.next(), element))
    }

    pub fn lift_to(&self, t: Level) -> Result<JMElement> {
        if t < self.level {
            return Err(Error::InvalidInput(format!(
                "cannot lift from {} down to {t}",
                self.level
            )));
        }
        let mut cur = self.clone();
        while cur.level < t {
            cur = cur.lift()?;
        }
        Ok(cur)
    }

    pub fn sub(&self, o: &JMElement) -> Result<JMElement> {
        if self.level != o.level {
            return Err(Error::InvalidInput(format!("levels {} and {}", self.level, o.level)));
        }
        Ok(JMElement::new(self.level, self.element.sub(&o.element)?))
    }

    pub fn add(&self, o: &JMElement) -> Result<JMElement> {
        if self.level != o.level {
            return Err(Error::InvalidInput(format!("levels {} and {}", self.level, o.level)));
        }
        Ok(JMElement::new(self.level, self.element.add(&o.element)?))
    }

    pub fn mul(&self, o: &JMElement) -> Result<JMElement> {
        if self.level != o.level {
            return Err(Error::InvalidInput(format!("levels {} and {}", self.level, o.level)));
        }
        Ok(JMElement::new(
            self.level,
            orbit_product_tppa(&self.element, &o.element)?,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn commutes_with(&self, o: &JMElement) -> Result<bool> {
        Ok(self.mul(o)? == o.mul(self)?)
    }
}

fn add_x(sum: &mut FormalSum<crate::diagram::PartitionDiagram, Poly>, d: crate::diagram::PartitionDiagram, c: i64) {
    sum.add_term(d, Poly::constant(rat(c)));
}

fn unordered_pairs(p: &SetPartition, skip: Option<usize>) -> Vec<(usize, usize)> {
    let idx: Vec<usize> = (0..p.num_blocks())
        .filter(|&b| skip.is_none_or(|v| !p.blocks()[b].contains(&v)))
        .collect();
    let mut out = Vec::new();
    for (i, &a) in idx.iter().enumerate() {
        for &b in &idx[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

fn check_level(t: Level) -> Result<()> {
    if t.twice() == 0 {
        return Err(Error::InvalidInput("levels start at 1/2".into()));
    }
    if t.diagram_size() > crate::diagram::MAX_TPPA_K {
        return Err(Error::GuardExceeded(format!("level {t}")));
    }
    Ok(())
}

/// Z_t: Σ |P| x_{d_P} at integer levels, Σ (|P|-1) x_{d_P} over ≥ 2 blocks at half levels.
pub fn build_z(t: Level) -> Result<JMElement> {
    check_level(t)?;
    if t == Level::HALF {
        return Ok(JMElement::one(t));
    }
    let size = t.diagram_size();
    let mut sum = FormalSum::zero();
    if t.is_integer() {
        for p in set_partitions(size, 1) {
            add_x(&mut sum, build_dp(&p), p.num_blocks() as i64);
        }
    } else {
        for p in set_partitions(size, 2) {
            add_x(&mut sum, build_dp(&p), p.num_blocks() as i64 - 1);
        }
    }
    Ok(JMElement::new(t, AlgebraElement::from_sum(size, Basis::Orbit, sum)?))
}

/// Z̃_t, summing over unordered pairs of distinct blocks (avoiding the block of
/// k+1 at half levels).
pub fn build_ztilde(t: Level) -> Result<JMElement> {
    check_level(t)?;
    let size = t.diagram_size();
    if t.twice() <= 3 {
        return Ok(JMElement::zero(t));
    }
    let mut sum = FormalSum::zero();
    if t.is_integer() {
        for p in set_partitions(size, 2) {
            for (a, b) in unordered_pairs(&p, None) {
                add_x(&mut sum, build_dpcd(&p, &p.blocks()[a], &p.blocks()[b])?, 1);
            }
        }
    } else {
        for p in set_partitions(size, 3) {
            for (a, b) in unordered_pairs(&p, Some(size)) {
                add_x(&mut sum, build_dtilde(&p, &p.blocks()[a], &p.blocks()[b])?, 1);
            }
        }
    }
    Ok(JMElement::new(t, AlgebraElement::from_sum(size, Basis::Orbit, sum)?))
}

/// The second form of Z_{k+½} and Z̃_{k+½}: η(Z_k) plus the terms whose block
/// of k+1 has more than one element.
pub fn half_level_via_embedding(k: u32, tilde: bool) -> Result<JMElement> {
    let t = Level::half(k);
    let size = t.diagram_size();
    let base = if tilde {
        build_ztilde(Level::integer(k))?
    } else {
        build_z(Level::integer(k))?
    };
    let mut sum = embed_half(&base.element)?.sum().clone();
    let min_blocks = if tilde { 3 } else { 2 };
    for p in set_partitions(size, min_blocks) {
        if p.block_of(size).is_none_or(|b| b.len() <= 1) {
            continue;
        }
        if tilde {
            for (a, c) in unordered_pairs(&p, Some(size)) {
                add_x(&mut sum, build_dtilde(&p, &p.blocks()[a], &p.blocks()[c])?, 1);
            }
        } else {
            add_x(&mut sum, build_dp(&p), p.num_blocks() as i64 - 1);
        }
    }
    Ok(JMElement::new(t, AlgebraElement::from_sum(size, Basis::Orbit, sum)?))
}

fn build_diff(y: Level, t: Level, tilde: bool) -> Result<JMElement> {
    if y > t || y.twice() == 0 {
        return Err(Error::InvalidInput(format!("need 1/2 <= y <= t, got y={y}, t={t}")));
    }
    check_level(t)?;
    let z = |l: Level| if tilde { build_ztilde(l) } else { build_z(l) };
    let m = if y == Level::HALF {
        if tilde {
            JMElement::zero(y)
        } else {
            JMElement::one(y)
        }
    } else {
        let prev = y.prev().expect("y > 1/2");
        z(y)?.sub(&z(prev)?.lift_to(y)?)?
    };
    m.lift_to(t)
}

/// M_y = Z_y - Z_{y-½}, viewed in ℂI_t.
pub fn build_m(y: Level, t: Level) -> Result<JMElement> {
    build_diff(y, t, false)
}

pub fn build_mtilde(y: Level, t: Level) -> Result<JMElement> {
    build_diff(y, t, true)
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralityReport {
    pub level: String,
    pub algebra_dim: usize,
    pub z_central: bool,
    pub ztilde_central: bool,
    pub jm_commute: bool,
    pub telescopes: bool,
    pub witness: Option<String>,
    pub ok: bool,
}

/// Z_t, Z̃_t central in ℂI_t; all M_y, M̃_y commute; Σ M_y = Z_t and Σ M̃_y = Z̃_t.
pub fn verify_centrality(t: Level) -> Result<CentralityReport> {
    if t > MAX_CENTRALITY_LEVEL {
        return Err(Error::GuardExceeded(format!(
            "centrality check limited to t <= {MAX_CENTRALITY_LEVEL}"
        )));
    }
    check_level(t)?;
    let diagrams = if t.is_integer() {
        enumerate_monoid(MonoidKind::TotallyPropagating, t.floor() as usize)?
    } else {
        enumerate_monoid(MonoidKind::HalfTotallyPropagating, t.floor() as usize)?
    };
    let z = build_z(t)?;
    let zt = build_ztilde(t)?;
    let mut witness = None;
    let mut central = |e: &JMElement, name: &str| -> Result<bool> {
        for d in &diagrams {
            let x = JMElement::new(t, to_orbit(&AlgebraElement::basis_element(d.clone(), Basis::Diagram)));
            if !e.commutes_with(&x)? {
                witness.get_or_insert_with(|| format!("{name} and {d}"));
                return Ok(false);
            }
        }
        Ok(true)
    };
    let z_central = central(&z, "Z")?;
    let ztilde_central = central(&zt, "Z~")?;
    let levels: Vec<Level> = t.up_to().collect();
    let mut ms = Vec::new();
    for &y in &levels {
        ms.push((format!("M_{y}"), build_m(y, t)?));
        ms.push((format!("M~_{y}"), build_mtilde(y, t)?));
    }
    let mut jm_commute = true;
    'outer: for (i, (na, a)) in ms.iter().enumerate() {
        for (nb, b) in &ms[i + 1..] {
            if !a.commutes_with(b)? {
                jm_commute = false;
                witness.get_or_insert_with(|| format!("{na} and {nb}"));
                break 'outer;
            }
        }
    }
    let mut sum_m = JMElement::zero(t);
    let mut sum_mt = JMElement::zero(t);
    for (i, (_, m)) in ms.iter().enumerate() {
        if i % 2 == 0 {
            sum_m = sum_m.add(m)?;
        } else {
            sum_mt = sum_mt.add(m)?;
        }
    }
    let telescopes = sum_m == z && sum_mt == zt;
    Ok(CentralityReport {
        level: t.to_string(),
        algebra_dim: diagrams.len(),
        z_central,
        ztilde_central,
        jm_commute,
        telescopes,
        ok: z_central && ztilde_central && jm_commute && telescopes,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorIdentityReport {
    pub n: usize,
    pub level: String,
    pub z_matches: bool,
    pub ztilde_matches: bool,
    /// First differing entry (row, column, diagram side, rook side).
    pub diff: Option<(usize, usize, String, String)>,
    pub ok: bool,
}

fn first_diff(a: &ExactMatrix, b: &ExactMatrix) -> Option<(usize, usize, String, String)> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j, a.get(i, j).to_string(), b.get(i, j).to_string()));
            }
        }
    }
    None
}

/// Z_k = κ_n, Z̃_k = κ̃_n on V^⊗k; Z_{k+½} = κ_{n-1}, Z̃_{k+½} = κ̃_{n-1} on V^⊗k ⊗ e_n.
pub fn verify_operator_identity(n: usize, t: Level) -> Result<OperatorIdentityReport> {
    check_level(t)?;
    let k = t.floor() as usize;
    if k == 0 {
        return Err(Error::InvalidInput("need t >= 1".into()));
    }
    if n < t.ceil() as usize {
        return Err(Error::InvalidInput(format!("need n >= {}", t.ceil())));
    }
    let half = !t.is_integer();
    let space = TensorSpace::new(n, k, half)?;
    let m = space.rook_n();
    let pairs = [
        (phi_operator(&build_z(t)?.element, &space)?, psi(&kappa(m)?, &space)?),
        (
            phi_operator(&build_ztilde(t)?.element, &space)?,
            psi(&kappa_tilde(m)?, &space)?,
        ),
    ];
    let z_matches = pairs[0].0 == pairs[0].1;
    let ztilde_matches = pairs[1].0 == pairs[1].1;
    let diff = pairs.iter().find_map(|(a, b)| first_diff(a, b));
    Ok(OperatorIdentityReport {
        n,
        level: t.to_string(),
        z_matches,
        ztilde_matches,
        diff,
        ok: z_matches && ztilde_matches,
    })
}

/// Predicted (M_y, M̃_y) for y = ½, 1, ..., t along a path of Î starting at ∅(½).
pub fn predicted_eigenvalues(path: &[YoungDiagram]) -> Vec<(Rational, Rational)> {
    let mut out = vec![(rat(1), rat(0))];
    for j in 1..path.len() {
        let (prev, cur) = (&path[j - 1], &path[j]);
        if j % 2 == 1 {
            // integer level l = (j+1)/2
            let l = j.div_ceil(2);
            let b = cur.skew_box(prev).expect("Î adds a box at integer levels");
            out.push((rat(i64::from(l >= 2)), rat(content(b))));
        } else {
            match prev.skew_box(cur) {
                Some(b) => out.push((rat(-1), rat(-content(b)))),
                None => out.push((rat(0), rat(0))),
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GtRow {
    pub path: Vec<String>,
    /// (M_y, M̃_y) for y = ½, 1, ..., t.
    pub eigenvalues: Vec<(String, String)>,
    pub dimension: usize,
    pub expected_dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GtReport {
    pub level: String,
    pub n: usize,
    pub space_dim: usize,
    pub rows: Vec<GtRow>,
    pub exhausts: bool,
    pub tuples_distinct: bool,
    /// Distinct paths to the same shape differ in their M̃ values alone.
    pub mtilde_separates: bool,
    /// Prefix eigenspaces split as the sum of their extensions.
    pub branching_consistent: bool,
    pub ok: bool,
}

fn module_dim(mu: &YoungDiagram, m: usize) -> usize {
    if mu.size() > m {
        0
    } else {
        (binomial(m, mu.size()) * f_lambda(mu)) as usize
    }
}

type Eigenspace = (GraphPath, Vec<(Rational, Rational)>, Vec<Vec<Rational>>, usize);

/// Eigenvalue tuple, simultaneous eigenspace basis and expected dimension for
/// every Î-path from ∅(½) to level t, acting on V^⊗⌊t⌋ (⊗ e_n at half levels).
pub fn gt_eigenspaces(t: Level, n: usize) -> Result<Vec<Eigenspace>> {
    check_level(t)?;
    let k = t.floor() as usize;
    if n < t.ceil() as usize || n == 0 {
        return Err(Error::InvalidInput(format!("need n >= {}", t.ceil().max(1))));
    }
    let space = TensorSpace::new(n, k, !t.is_integer())?;
    let ops = jm_operators(t, &space)?;
    let g = ihat(t);
    let li = g.level_index(t).expect("top level");
    let empty = YoungDiagram::empty();
    let mut out = Vec::new();
    for mu in g.vertices[li].clone() {
        for p in g.enumerate_paths((Level::HALF, &empty), (t, &mu), u128::MAX)? {
            let tuple = predicted_eigenvalues(&p.vertices);
            let flat: Vec<Rational> = tuple.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
            let mut basis = simultaneous_eigenspace(&ops, &flat)?;
            for v in &mut basis {
                normalize_first(v);
            }
            let expected = module_dim(&mu, space.rook_n());
            out.push((p, tuple, basis, expected));
        }
    }
    Ok(out)
}

/// Operator images of M_½, M̃_½, M_1, M̃_1, ..., M_t, M̃_t on the tensor space.
pub fn jm_operators(t: Level, space: &TensorSpace) -> Result<Vec<ExactMatrix>> {
    let mut ops = Vec::new();
    for y in t.up_to() {
        ops.push(phi_operator(&build_m(y, t)?.element, space)?);
        ops.push(phi_operator(&build_mtilde(y, t)?.element, space)?);
    }
    Ok(ops)
}

pub fn gt_decompose(t: Level, n: usize) -> Result<GtReport> {
    let spaces = gt_eigenspaces(t, n)?;
    let k = t.floor() as usize;
    let space = TensorSpace::new(n, k, !t.is_integer())?;
    let total: usize = spaces.iter().map(|(_, _, b, _)| b.len()).sum();
    let exhausts = total == space.dim() && spaces.iter().all(|(_, _, b, e)| b.len() == *e);

    let mut seen = BTreeMap::new();
    let mut tuples_distinct = true;
    for (p, tuple, _, _) in &spaces {
        if seen.insert(tuple.clone(), p.clone()).is_some() {
            tuples_distinct = false;
        }
    }
    let mut mtilde_separates = true;
    for (i, (p, a, _, _)) in spaces.iter().enumerate() {
        for (q, b, _, _) in &spaces[i + 1..] {
            if p.end() == q.end() && a.iter().map(|x| &x.1).eq(b.iter().map(|x| &x.1)) {
                mtilde_separates = false;
            }
        }
    }

    // Each prefix tuple's eigenspace is the sum of its extensions' eigenspaces.
    let mut branching_consistent = true;
    if t > Level::HALF {
        let ops = jm_operators(t, &space)?;
        let cut = 2 * (t.twice() as usize - 1);
        let mut groups: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
        for (_, tuple, basis, _) in &spaces {
            let flat: Vec<Rational> = tuple.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
            *groups.entry(flat[..cut].to_vec()).or_default() += basis.len();
        }
        for (prefix, dim) in groups {
            if simultaneous_eigenspace(&ops[..cut], &prefix)?.len() != dim {
                branching_consistent = false;
            }
        }
    }

    let rows = spaces
        .iter()
        .map(|(p, tuple, basis, expected)| GtRow {
            path: p.vertices.iter().map(ToString::to_string).collect(),
            eigenvalues: tuple.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            dimension: basis.len(),
            expected_dimension: *expected,
        })
        .collect();
    let ok = exhausts && tuples_distinct && branching_consistent && (!t.is_integer() || mtilde_separates);
    Ok(GtReport {
        level: t.to_string(),
        n,
        space_dim: space.dim(),
        rows,
        exhausts,
        tuples_distinct,
        mtilde_separates,
        branching_consistent,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PartitionDiagram;

    fn pd(s: &str) -> PartitionDiagram {
        s.parse().unwrap()
    }

    fn orbit(k: usize, terms: &[(&str, i64)]) -> AlgebraElement {
        let mut sum = FormalSum::zero();
        for (d, c) in terms {
            sum.add_term(pd(d), Poly::constant(rat(*c)));
        }
        AlgebraElement::from_sum(k, Basis::Orbit, sum).unwrap()
    }

    #[test]
    fn small_builders() {
        assert_eq!(
            build_z(Level::integer(1)).unwrap().element,
            AlgebraElement::identity(1, Basis::Orbit)
        );
        assert_eq!(
            build_ztilde(Level::integer(2)).unwrap().element,
            orbit(2, &[("[[1,-2],[2,-1]]", 1)])
        );
        assert_eq!(
            build_z(Level::integer(2)).unwrap().element,
            orbit(2, &[("[[1,2,-1,-2]]", 1), ("[[1,-1],[2,-2]]", 2)])
        );
        assert!(build_m(Level::integer(1), Level::integer(1)).unwrap().is_zero());
        assert!(build_mtilde(Level::integer(1), Level::integer(1)).unwrap().is_zero());
        assert_eq!(
            build_m(Level::HALF, Level::integer(2)).unwrap().element,
            AlgebraElement::identity(2, Basis::Orbit)
        );
        assert!(build_m(Level::integer(3), Level::integer(2)).is_err());
    }

    #[test]
    fn half_level_forms_agree() {
        for k in 1..=3 {
            assert_eq!(
                half_level_via_embedding(k, false).unwrap(),
                build_z(Level::half(k)).unwrap()
            );
            assert_eq!(
                half_level_via_embedding(k, true).unwrap(),
                build_ztilde(Level::half(k)).unwrap()
            );
        }
    }

    #[test]
    fn centrality_small() {
        for t in [
            Level::HALF,
            Level::integer(1),
            Level::half(1),
            Level::integer(2),
            Level::half(2),
        ] {
            let r = verify_centrality(t).unwrap();
            assert!(r.ok, "{r:?}");
        }
        assert_eq!(verify_centrality(Level::half(2)).unwrap().algebra_dim, 12);
    }

    #[test]
    fn operator_identities() {
        for (n, t) in [
            (2, Level::integer(1)),
            (3, Level::integer(2)),
            (3, Level::half(2)),
            (2, Level::half(1)),
        ] {
            let r = verify_operator_identity(n, t).unwrap();
            assert!(r.ok, "{r:?}");
        }
    }

    #[test]
    fn gt_small() {
        let r = gt_decompose(Level::integer(1), 2).unwrap();
        assert!(r.ok);
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].dimension, 2);
        let r = gt_decompose(Level::half(1), 2).unwrap();
        assert!(r.ok, "{r:?}");
        let m32: Vec<&str> = r.rows.iter().map(|row| row.eigenvalues[2].0.as_str()).collect();
        assert_eq!(m32, vec!["-1", "0"]);
        let r = gt_decompose(Level::integer(2), 2).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.rows.iter().map(|x| x.dimension).sum::<usize>(), 4);
    }
}
