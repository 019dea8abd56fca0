//! Partition diagrams, the partition algebra in the diagram and orbit bases,
//! and the totally propagating subalgebras.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::combinat::{for_each_rgs, SetPartition};
use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::scalar::{rat, Poly, Rational};

/// A set partition of {1..k} ∪ {1'..k'}.
///
/// Vertices are ranked 1..k, then 1'..k'; `rgs[rank]` is the block label as a
/// restricted growth string, which makes the representation canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionDiagram {
    k: usize,
    rgs: Vec<u8>,
}

fn canonical_labels(labels: &[usize]) -> Vec<u8> {
    let mut map: BTreeMap<usize, u8> = BTreeMap::new();
    labels
        .iter()
        .map(|l| {
            let next = map.len() as u8;
            *map.entry(*l).or_insert(next)
        })
        .collect()
}

impl PartitionDiagram {
    fn from_labels(k: usize, labels: &[usize]) -> Self {
        debug_assert_eq!(labels.len(), 2 * k);
        PartitionDiagram {
            k,
            rgs: canonical_labels(labels),
        }
    }

    pub fn from_rgs(k: usize, rgs: &[u8]) -> Self {
        Self::from_labels(k, &rgs.iter().map(|&x| x as usize).collect::<Vec<_>>())
    }

    pub fn identity(k: usize) -> Self {
        let labels: Vec<usize> = (0..k).chain(0..k).collect();
        Self::from_labels(k, &labels)
    }

    /// Blocks in the signed encoding (j ↦ j, j' ↦ -j).
    pub fn from_blocks(k: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; 2 * k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &v in block {
                let r = Self::rank_of(k, v)
                    .ok_or_else(|| Error::InvalidInput(format!("vertex {v} out of range for k={k}")))?;
                if labels[r] != usize::MAX {
                    return Err(Error::InvalidInput(format!("vertex {v} repeated")));
                }
                labels[r] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidInput("blocks do not cover all vertices".into()));
        }
        Ok(Self::from_labels(k, &labels))
    }

    fn rank_of(k: usize, v: i64) -> Option<usize> {
        let a = v.unsigned_abs() as usize;
        if v == 0 || a > k {
            return None;
        }
        Some(if v > 0 { a - 1 } else { k + a - 1 })
    }

    fn vertex_of(&self, rank: usize) -> i64 {
        if rank < self.k {
            rank as i64 + 1
        } else {
            -((rank - self.k) as i64 + 1)
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[u8] {
        &self.rgs
    }

    pub fn top(&self, j: usize) -> u8 {
        self.rgs[j - 1]
    }

    pub fn bottom(&self, j: usize) -> u8 {
        self.rgs[self.k + j - 1]
    }

    /// |d|.
    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Blocks ordered by least rank; inside a block, top vertices first.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (r, &l) in self.rgs.iter().enumerate() {
            out[l as usize].push(self.vertex_of(r));
        }
        out
    }

    fn block_kinds(&self) -> Vec<(bool, bool)> {
        let mut kinds = vec![(false, false); self.num_blocks()];
        for (r, &l) in self.rgs.iter().enumerate() {
            if r < self.k {
                kinds[l as usize].0 = true;
            } else {
                kinds[l as usize].1 = true;
            }
        }
        kinds
    }

    pub fn is_totally_propagating(&self) -> bool {
        self.block_kinds().iter().all(|&(t, b)| t && b)
    }

    /// Membership in I_{k-1+½}: totally propagating with k and k' together.
    pub fn is_half(&self) -> bool {
        self.k >= 1 && self.is_totally_propagating() && self.top(self.k) == self.bottom(self.k)
    }

    /// Adds the block {k+1, (k+1)'}.
    pub fn with_extra_block(&self) -> Self {
        let nb = self.num_blocks();
        let mut labels: Vec<usize> = self.rgs[..self.k].iter().map(|&x| x as usize).collect();
        labels.push(nb);
        labels.extend(self.rgs[self.k..].iter().map(|&x| x as usize));
        labels.push(nb);
        Self::from_labels(self.k + 1, &labels)
    }

    /// All diagrams coarser than or equal to `self`, with the Möbius value μ(self, d').
    pub fn coarsenings(&self) -> Vec<(PartitionDiagram, Rational)> {
        let b = self.num_blocks();
        let mut out = Vec::new();
        for_each_rgs(b, |q| {
            let labels: Vec<usize> = self.rgs.iter().map(|&l| q[l as usize] as usize).collect();
            let groups = q.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
            let mut sizes = vec![0usize; groups];
            for &g in q {
                sizes[g as usize] += 1;
            }
            let mu = sizes.iter().fold(rat(1), |acc, &s| {
                let f: i64 = (1..s as i64).product();
                acc * rat(if s % 2 == 1 { f } else { -f })
            });
            out.push((Self::from_labels(self.k, &labels), mu));
        });
        out
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.blocks()).unwrap())
    }
}

impl FromStr for PartitionDiagram {
    type Err = Error;
    /// Parses "[[1,3],[2,-4],...]"; k is the largest |vertex|.
    fn from_str(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("diagram {s:?}: {e}")))?;
        let k = blocks
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        if k == 0 {
            return Err(Error::Parse("empty diagram".into()));
        }
        PartitionDiagram::from_blocks(k, &blocks)
    }
}

fn same_k(d1: &PartitionDiagram, d2: &PartitionDiagram) -> Result<()> {
    if d1.k != d2.k {
        return Err(Error::SizeMismatch {
            expected: d1.k,
            found: d2.k,
        });
    }
    Ok(())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// d1 ∘ d2 (d1 on top) and the number of components confined to the middle row.
pub fn compose(d1: &PartitionDiagram, d2: &PartitionDiagram) -> Result<(PartitionDiagram, usize)> {
    same_k(d1, d2)?;
    let k = d1.k;
    let mut uf = UnionFind::new(3 * k);
    let link = |d: &PartitionDiagram, offset: usize, uf: &mut UnionFind| {
        let mut first: Vec<Option<usize>> = vec![None; d.num_blocks()];
        for (r, &l) in d.rgs.iter().enumerate() {
            let node = offset + r;
            match first[l as usize] {
                None => first[l as usize] = Some(node),
                Some(f) => uf.union(f, node),
            }
        }
    };
    link(d1, 0, &mut uf);
    link(d2, k, &mut uf);
    let outer: Vec<usize> = (0..k).chain(2 * k..3 * k).map(|x| uf.find(x)).collect();
    let mut middle: Vec<usize> = (k..2 * k).map(|x| uf.find(x)).filter(|r| !outer.contains(r)).collect();
    middle.sort_unstable();
    middle.dedup();
    Ok((PartitionDiagram::from_labels(k, &outer), middle.len()))
}

/// Every block of d2 lies inside a block of d1.
pub fn is_coarser(d1: &PartitionDiagram, d2: &PartitionDiagram) -> Result<bool> {
    same_k(d1, d2)?;
    let mut image: Vec<Option<u8>> = vec![None; d2.num_blocks()];
    for (&l2, &l1) in d2.rgs.iter().zip(&d1.rgs) {
        match image[l2 as usize] {
            None => image[l2 as usize] = Some(l1),
            Some(x) if x != l1 => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// i', j' share a block of d1 iff i, j share a block of d2.
pub fn bottom_matches_top(d1: &PartitionDiagram, d2: &PartitionDiagram) -> bool {
    let k = d1.k;
    (1..=k).all(|i| (i + 1..=k).all(|j| (d1.bottom(i) == d1.bottom(j)) == (d2.top(i) == d2.top(j))))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Diagram,
    Orbit,
}

/// Element of ℂA_k(ξ) in one of the two bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    k: usize,
    basis: Basis,
    sum: FormalSum<PartitionDiagram, Poly>,
}

impl AlgebraElement {
    pub fn zero(k: usize, basis: Basis) -> Self {
        AlgebraElement {
            k,
            basis,
            sum: FormalSum::zero(),
        }
    }

    pub fn basis_element(d: PartitionDiagram, basis: Basis) -> Self {
        AlgebraElement {
            k: d.k,
            basis,
            sum: FormalSum::basis(d),
        }
    }

    pub fn from_sum(k: usize, basis: Basis, sum: FormalSum<PartitionDiagram, Poly>) -> Result<Self> {
        if let Some(d) = sum.keys().find(|d| d.k != k) {
            return Err(Error::SizeMismatch {
                expected: k,
                found: d.k,
            });
        }
        Ok(AlgebraElement { k, basis, sum })
    }

    pub fn identity(k: usize, basis: Basis) -> Self {
        let e = Self::basis_element(PartitionDiagram::identity(k), Basis::Diagram);
        match basis {
            Basis::Diagram => e,
            Basis::Orbit => to_orbit(&e),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn sum(&self) -> &FormalSum<PartitionDiagram, Poly> {
        &self.sum
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }

    pub fn coeff(&self, d: &PartitionDiagram) -> Poly {
        self.sum.coeff(d)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.k != o.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: o.k,
            });
        }
        if self.basis != o.basis {
            return Err(Error::InvalidInput("basis mismatch".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(AlgebraElement {
            sum: self.sum.add(&o.sum),
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(AlgebraElement {
            sum: self.sum.sub(&o.sum),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Poly) -> Self {
        AlgebraElement {
            sum: self.sum.scale(c),
            ..self.clone()
        }
    }

    /// Product in whichever basis both operands use.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        match self.basis {
            Basis::Diagram => diagram_product(self, o),
            Basis::Orbit => orbit_product_general(self, o),
        }
    }

    /// Coefficients with ξ evaluated.
    pub fn eval_xi(&self, xi: &Rational) -> FormalSum<PartitionDiagram, Rational> {
        self.sum.map_coeffs(|p| p.eval(xi))
    }

    /// Coefficients as rationals, if none involves ξ.
    pub fn constant_coeffs(&self) -> Option<FormalSum<PartitionDiagram, Rational>> {
        let mut out = FormalSum::zero();
        for (d, c) in &self.sum {
            out.add_term(d.clone(), c.as_constant()?);
        }
        Some(out)
    }

    pub fn all_totally_propagating(&self) -> bool {
        self.sum.keys().all(PartitionDiagram::is_totally_propagating)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Diagram => "",
            Basis::Orbit => "x",
        };
        if self.sum.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.sum.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{sym}{d}")?;
        }
        Ok(())
    }
}

fn require_basis(a: &AlgebraElement, b: Basis) -> Result<()> {
    if a.basis != b {
        return Err(Error::InvalidInput(format!("expected {b:?} basis")));
    }
    Ok(())
}

/// d1 d2 = ξ^l (d1 ∘ d2), extended bilinearly.
pub fn diagram_product(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    require_basis(a, Basis::Diagram)?;
    require_basis(b, Basis::Diagram)?;
    a.check(b)?;
    let sum = a.sum.bilinear(&b.sum, |d1, d2| {
        let (d, l) = compose(d1, d2).expect("sizes checked");
        FormalSum::term(d, Poly::xi_pow(l))
    });
    Ok(AlgebraElement { sum, ..a.clone() })
}

/// Diagram basis to orbit basis: d = Σ_{d' coarser than d} x_{d'}.
pub fn to_orbit(a: &AlgebraElement) -> AlgebraElement {
    if a.basis == Basis::Orbit {
        return a.clone();
    }
    let sum = a
        .sum
        .linear(|d| d.coarsenings().into_iter().map(|(c, _)| (c, Poly::one())).collect());
    AlgebraElement {
        k: a.k,
        basis: Basis::Orbit,
        sum,
    }
}

/// Orbit basis to diagram basis by Möbius inversion on the coarsening order.
pub fn from_orbit(a: &AlgebraElement) -> AlgebraElement {
    if a.basis == Basis::Diagram {
        return a.clone();
    }
    let sum = a.sum.linear(|d| {
        d.coarsenings()
            .into_iter()
            .map(|(c, mu)| (c, Poly::constant(mu)))
            .collect()
    });
    AlgebraElement {
        k: a.k,
        basis: Basis::Diagram,
        sum,
    }
}

fn orbit_pair(d1: &PartitionDiagram, d2: &PartitionDiagram) -> FormalSum<PartitionDiagram, Poly> {
    if !bottom_matches_top(d1, d2) {
        return FormalSum::zero();
    }
    let k = d1.k;
    let (comp, internal) = compose(d1, d2).expect("sizes checked");
    // Top-only blocks of d1 and bottom-only blocks of d2 survive unchanged as
    // blocks of the composite; name them by their composite label.
    let top_only: Vec<u8> = d1
        .block_kinds()
        .iter()
        .enumerate()
        .filter(|(_, &(_, b))| !b)
        .map(|(l, _)| {
            let r = d1.rgs.iter().position(|&x| x as usize == l).unwrap();
            comp.rgs[r]
        })
        .collect();
    let bottom_only: Vec<u8> = d2
        .block_kinds()
        .iter()
        .enumerate()
        .filter(|(_, &(t, _))| !t)
        .map(|(l, _)| {
            let r = d2.rgs.iter().position(|&x| x as usize == l).unwrap();
            comp.rgs[r]
        })
        .collect();
    let mut out = FormalSum::zero();
    let mut used = vec![false; bottom_only.len()];
    let mut merges: Vec<(u8, u8)> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        top: &[u8],
        bot: &[u8],
        used: &mut [bool],
        merges: &mut Vec<(u8, u8)>,
        comp: &PartitionDiagram,
        internal: usize,
        k: usize,
        out: &mut FormalSum<PartitionDiagram, Poly>,
    ) {
        if i == top.len() {
            let labels: Vec<usize> = comp
                .rgs
                .iter()
                .map(|&l| merges.iter().find(|&&(_, b)| b == l).map_or(l, |&(t, _)| t) as usize)
                .collect();
            let d = PartitionDiagram::from_labels(k, &labels);
            let base = Poly::xi() - Poly::constant(rat(d.num_blocks() as i64));
            out.add_term(d, base.falling_factorial(internal));
            return;
        }
        go(i + 1, top, bot, used, merges, comp, internal, k, out);
        for j in 0..bot.len() {
            if !used[j] {
                used[j] = true;
                merges.push((top[i], bot[j]));
                go(i + 1, top, bot, used, merges, comp, internal, k, out);
                merges.pop();
                used[j] = false;
            }
        }
    }
    go(
        0,
        &top_only,
        &bottom_only,
        &mut used,
        &mut merges,
        &comp,
        internal,
        k,
        &mut out,
    );
    out
}

/// x_{d1} x_{d2} in the orbit basis with symbolic ξ.
pub fn orbit_product_general(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    require_basis(a, Basis::Orbit)?;
    require_basis(b, Basis::Orbit)?;
    a.check(b)?;
    let sum = a.sum.bilinear(&b.sum, orbit_pair);
    Ok(AlgebraElement { sum, ..a.clone() })
}

/// x_{d1} x_{d2} = x_{d1∘d2} on a match, else 0; totally propagating inputs only.
pub fn orbit_product_tppa(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    require_basis(a, Basis::Orbit)?;
    require_basis(b, Basis::Orbit)?;
    a.check(b)?;
    if !a.all_totally_propagating() || !b.all_totally_propagating() {
        return Err(Error::InvalidInput("not totally propagating".into()));
    }
    let sum = a.sum.bilinear(&b.sum, |d1, d2| {
        if bottom_matches_top(d1, d2) {
            FormalSum::basis(compose(d1, d2).expect("sizes checked").0)
        } else {
            FormalSum::zero()
        }
    });
    Ok(AlgebraElement { sum, ..a.clone() })
}

/// η_k: x_d ↦ x_{d ∪ {k+1,(k+1)'}}.
pub fn embed_half(x: &AlgebraElement) -> Result<AlgebraElement> {
    require_basis(x, Basis::Orbit)?;
    if !x.all_totally_propagating() {
        return Err(Error::InvalidInput("not totally propagating".into()));
    }
    Ok(AlgebraElement {
        k: x.k + 1,
        basis: Basis::Orbit,
        sum: x.sum.linear(|d| FormalSum::basis(d.with_extra_block())),
    })
}

/// Unital inclusion ℂI_k ⊂ ℂI_{k+½}: d ↦ d ∪ {k+1,(k+1)'} on diagrams,
/// returned in the basis of the input.
pub fn include_half(x: &AlgebraElement) -> Result<AlgebraElement> {
    if !x.all_totally_propagating() {
        return Err(Error::InvalidInput("not totally propagating".into()));
    }
    let diag = from_orbit(x);
    let lifted = AlgebraElement {
        k: x.k + 1,
        basis: Basis::Diagram,
        sum: diag.sum.linear(|d| FormalSum::basis(d.with_extra_block())),
    };
    Ok(match x.basis {
        Basis::Diagram => lifted,
        Basis::Orbit => to_orbit(&lifted),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonoidKind {
    /// A_k
    Partition,
    /// I_k
    TotallyPropagating,
    /// I_{k+½}, as diagrams on k+1 vertices per row
    HalfTotallyPropagating,
}

pub const MAX_PARTITION_K: usize = 6;
pub const MAX_TPPA_K: usize = 5;

pub fn enumerate_monoid(kind: MonoidKind, k: usize) -> Result<Vec<PartitionDiagram>> {
    let mut out = Vec::new();
    match kind {
        MonoidKind::Partition => {
            if k > MAX_PARTITION_K {
                return Err(Error::GuardExceeded(format!("A_{k} (limit {MAX_PARTITION_K})")));
            }
            for_each_rgs(2 * k, |r| out.push(PartitionDiagram::from_rgs(k, r)));
        }
        MonoidKind::TotallyPropagating => {
            if k > MAX_TPPA_K {
                return Err(Error::GuardExceeded(format!("I_{k} (limit {MAX_TPPA_K})")));
            }
            out = totally_propagating(k);
        }
        MonoidKind::HalfTotallyPropagating => {
            if k + 1 > MAX_TPPA_K {
                return Err(Error::GuardExceeded(format!(
                    "I_{{{k}+1/2}} (limit {})",
                    MAX_TPPA_K - 1
                )));
            }
            out = totally_propagating(k + 1).into_iter().filter(|d| d.is_half()).collect();
        }
    }
    out.sort();
    Ok(out)
}

fn totally_propagating(k: usize) -> Vec<PartitionDiagram> {
    let parts = crate::combinat::set_partitions(k, 1);
    let mut out = Vec::new();
    for p in &parts {
        for q in parts.iter().filter(|q| q.num_blocks() == p.num_blocks()) {
            for perm in permutations(p.num_blocks()) {
                let mut labels = vec![0usize; 2 * k];
                for (b, block) in p.blocks().iter().enumerate() {
                    for &v in block {
                        labels[v - 1] = b;
                    }
                    for &v in &q.blocks()[perm[b]] {
                        labels[k + v - 1] = b;
                    }
                }
                out.push(PartitionDiagram::from_labels(k, &labels));
            }
        }
    }
    out
}

pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

/// d_P: blocks B ∪ B'.
pub fn build_dp(p: &SetPartition) -> PartitionDiagram {
    let k = p.k();
    let mut labels = vec![0usize; 2 * k];
    for (b, block) in p.blocks().iter().enumerate() {
        for &v in block {
            labels[v - 1] = b;
            labels[k + v - 1] = b;
        }
    }
    PartitionDiagram::from_labels(k, &labels)
}

fn block_index(p: &SetPartition, c: &[usize]) -> Result<usize> {
    let mut c = c.to_vec();
    c.sort_unstable();
    p.blocks()
        .iter()
        .position(|b| *b == c)
        .ok_or_else(|| Error::InvalidInput(format!("{c:?} is not a block of {p}")))
}

/// d_{P,{C,D}}: C ∪ D', D ∪ C', and B ∪ B' for the other blocks.
pub fn build_dpcd(p: &SetPartition, c: &[usize], d: &[usize]) -> Result<PartitionDiagram> {
    let (ci, di) = (block_index(p, c)?, block_index(p, d)?);
    if ci == di {
        return Err(Error::InvalidInput("C and D must differ".into()));
    }
    let k = p.k();
    let mut labels = vec![0usize; 2 * k];
    for (b, block) in p.blocks().iter().enumerate() {
        let bottom = if b == ci {
            di
        } else if b == di {
            ci
        } else {
            b
        };
        for &v in block {
            labels[v - 1] = b;
        }
        for &v in &p.blocks()[bottom] {
            labels[k + v - 1] = b;
        }
    }
    Ok(PartitionDiagram::from_labels(k, &labels))
}

/// d̃_{P,{C,D}} for a set partition of {1..k+1}; C and D avoid the block of k+1.
pub fn build_dtilde(p: &SetPartition, c: &[usize], d: &[usize]) -> Result<PartitionDiagram> {
    let last = p.k();
    if c.contains(&last) || d.contains(&last) {
        return Err(Error::InvalidInput(format!(
            "C and D must avoid the block containing {last}"
        )));
    }
    build_dpcd(p, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PartitionDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn figure_three_composition() {
        let d1 = pd("[[1,3],[2,-1],[4],[-2,-3],[-4]]");
        let d2 = pd("[[1,-4],[2],[3],[4],[-1],[-2,-3]]");
        let (d, l) = compose(&d1, &d2).unwrap();
        assert_eq!(d.to_string(), "[[1,3],[2,-4],[4],[-1],[-2,-3]]");
        assert_eq!(l, 2);
    }

    #[test]
    fn small_composition() {
        let (d, l) = compose(&pd("[[1,2],[-1],[-2]]"), &pd("[[1],[2],[-1,-2]]")).unwrap();
        assert_eq!(d, pd("[[1,2],[-1,-2]]"));
        assert_eq!(l, 2);
        let id = PartitionDiagram::identity(2);
        let x = pd("[[1,-2],[2,-1]]");
        assert_eq!(compose(&id, &x).unwrap(), (x, 0));
    }

    #[test]
    fn canonical_text() {
        let d = pd("[[4,-2],[3,-4],[1,2,-1,-3]]");
        assert_eq!(d.to_string(), "[[1,2,-1,-3],[3,-4],[4,-2]]");
        assert_eq!(pd(&d.to_string()), d);
        assert!("[[1],[1,-1]]".parse::<PartitionDiagram>().is_err());
        assert!("[[1,-2]]".parse::<PartitionDiagram>().is_err());
    }

    #[test]
    fn coarser() {
        let one = pd("[[1,-1]]");
        let two = pd("[[1],[-1]]");
        assert!(is_coarser(&one, &two).unwrap());
        assert!(!is_coarser(&two, &one).unwrap());
        assert!(is_coarser(&two, &two).unwrap());
    }

    #[test]
    fn orbit_k1() {
        let x = AlgebraElement::basis_element(pd("[[1],[-1]]"), Basis::Orbit);
        let d = from_orbit(&x);
        assert_eq!(d.coeff(&pd("[[1],[-1]]")), Poly::one());
        assert_eq!(d.coeff(&pd("[[1,-1]]")), -Poly::one());
        assert_eq!(to_orbit(&d), x);
        let sq = orbit_product_general(&x, &x).unwrap();
        let xi = Poly::xi();
        assert_eq!(sq.coeff(&pd("[[1],[-1]]")), xi.clone() - Poly::constant(rat(2)));
        assert_eq!(sq.coeff(&pd("[[1,-1]]")), xi - Poly::one());
    }

    #[test]
    fn predicates() {
        let id = PartitionDiagram::identity(2);
        assert!(id.is_totally_propagating() && id.is_half());
        let sw = pd("[[1,-2],[2,-1]]");
        assert!(sw.is_totally_propagating() && !sw.is_half());
        let one = pd("[[1,2,-1,-2]]");
        assert!(one.is_totally_propagating() && one.is_half());
    }

    #[test]
    fn monoid_sizes() {
        assert_eq!(enumerate_monoid(MonoidKind::Partition, 2).unwrap().len(), 15);
        assert_eq!(enumerate_monoid(MonoidKind::TotallyPropagating, 2).unwrap().len(), 3);
        assert_eq!(enumerate_monoid(MonoidKind::TotallyPropagating, 3).unwrap().len(), 25);
        assert_eq!(
            enumerate_monoid(MonoidKind::HalfTotallyPropagating, 1).unwrap().len(),
            2
        );
        assert_eq!(
            enumerate_monoid(MonoidKind::HalfTotallyPropagating, 2).unwrap().len(),
            12
        );
        assert!(enumerate_monoid(MonoidKind::Partition, 7).is_err());
        assert!(enumerate_monoid(MonoidKind::TotallyPropagating, 6).is_err());
    }

    #[test]
    fn jm_building_blocks() {
        let p = SetPartition::from_blocks(vec![vec![1, 2], vec![3]], 3).unwrap();
        assert_eq!(build_dp(&p), pd("[[1,2,-1,-2],[3,-3]]"));
        let p = SetPartition::from_blocks(vec![vec![1, 3], vec![4], vec![2, 5]], 5).unwrap();
        assert_eq!(
            build_dpcd(&p, &[1, 3], &[2, 5]).unwrap(),
            pd("[[1,3,-2,-5],[4,-4],[2,5,-1,-3]]")
        );
        assert_eq!(
            build_dtilde(&p, &[1, 3], &[4]).unwrap(),
            pd("[[1,3,-4],[4,-1,-3],[2,5,-2,-5]]")
        );
        assert!(build_dtilde(&p, &[1, 3], &[2, 5]).is_err());
        assert!(build_dpcd(&p, &[1, 3], &[1, 3]).is_err());
        assert!(build_dpcd(&p, &[1], &[4]).is_err());
    }

    #[test]
    fn embeddings() {
        let x = AlgebraElement::basis_element(pd("[[1,-1]]"), Basis::Orbit);
        let e = embed_half(&x).unwrap();
        assert_eq!(e.sum().keys().next().unwrap(), &pd("[[1,-1],[2,-2]]"));
        let i = include_half(&x).unwrap();
        assert_eq!(i, AlgebraElement::identity(2, Basis::Orbit));
    }
}
