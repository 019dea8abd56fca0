//! Characters of S_r and R_n, the Kronecker product with ℂⁿ, and modified induction/restriction.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::combinat::{corner_set, partitions_upto, CornerMode, YoungDiagram};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rook::{enumerate_rook, fixed_points, support_data, RookElement};
use crate::scalar::{rat, Rational};
use crate::seminormal::RookIrrep;

/// Shapes with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PartitionMultiset(BTreeMap<YoungDiagram, usize>);

impl PartitionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(l: YoungDiagram) -> Self {
        let mut m = Self::new();
        m.insert(l, 1);
        m
    }

    pub fn insert(&mut self, l: YoungDiagram, mult: usize) {
        if mult > 0 {
            *self.0.entry(l).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, l: &YoungDiagram) -> usize {
        self.0.get(l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, &usize)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

impl FromIterator<YoungDiagram> for PartitionMultiset {
    fn from_iter<I: IntoIterator<Item = YoungDiagram>>(it: I) -> Self {
        let mut m = Self::new();
        for l in it {
            m.insert(l, 1);
        }
        m
    }
}

impl fmt::Display for PartitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{m}·{l}") })
            .collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// Caches seminormal modules so repeated character evaluations stay cheap.
#[derive(Default)]
pub struct CharacterTable {
    irreps: HashMap<(YoungDiagram, usize), RookIrrep>,
    sym: HashMap<(YoungDiagram, RookElement), Rational>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn irrep(&mut self, l: &YoungDiagram, n: usize) -> Result<&RookIrrep> {
        match self.irreps.entry((l.clone(), n)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(RookIrrep::new(l, n)?)),
        }
    }

    /// χ_λ(σ) for σ ∈ S_{|λ|}, as the trace of V^λ_{|λ|}.
    pub fn chi_sym(&mut self, l: &YoungDiagram, sigma: &RookElement) -> Result<Rational> {
        if sigma.n() != l.size() || !sigma.is_permutation() {
            return Err(Error::SizeMismatch {
                expected: l.size(),
                found: sigma.n(),
            });
        }
        if let Some(v) = self.sym.get(&(l.clone(), sigma.clone())) {
            return Ok(v.clone());
        }
        let v = self.irrep(l, l.size())?.character(sigma)?;
        self.sym.insert((l.clone(), sigma.clone()), v.clone());
        Ok(v)
    }

    /// χ*_λ(σ) = Σ_{K ∈ C_{σ,|λ|}} χ_λ(θ_K σ θ_K^tr).
    pub fn chi_star(&mut self, l: &YoungDiagram, sigma: &RookElement) -> Result<Rational> {
        if l.size() > sigma.n() {
            return Err(Error::InvalidInput(format!("|{l}| > {}", sigma.n())));
        }
        let mut acc = Rational::zero();
        for item in support_data(sigma, l.size()) {
            acc += self.chi_sym(l, &item.compressed)?;
        }
        Ok(acc)
    }

    /// Trace of V^λ_n directly, for cross-checks.
    pub fn trace_character(&mut self, l: &YoungDiagram, sigma: &RookElement) -> Result<Rational> {
        let n = sigma.n();
        self.irrep(l, n)?.character(sigma)
    }
}

pub fn chi_sym(l: &YoungDiagram, sigma: &RookElement) -> Result<Rational> {
    CharacterTable::new().chi_sym(l, sigma)
}

pub fn chi_star(l: &YoungDiagram, sigma: &RookElement) -> Result<Rational> {
    CharacterTable::new().chi_star(l, sigma)
}

/// λ^{-+} (one copy per route) together with λ^{+,n}, checked pointwise on R_n.
pub fn kronecker_with_defining(l: &YoungDiagram, n: usize) -> Result<PartitionMultiset> {
    kronecker_with_table(l, n, &mut CharacterTable::new())
}

pub fn kronecker_with_table(l: &YoungDiagram, n: usize, table: &mut CharacterTable) -> Result<PartitionMultiset> {
    if l.size() > n {
        return Err(Error::InvalidInput(format!("|{l}| > {n}")));
    }
    let minus_plus = corner_set(l, CornerMode::MinusPlus, n);
    let plus = corner_set(l, CornerMode::PlusN, n);
    if minus_plus.iter().any(|m| plus.contains(m)) {
        return Err(Error::Verification(format!("λ^-+ and λ^+,n overlap for λ={l}")));
    }
    let out: PartitionMultiset = minus_plus.into_iter().chain(plus).collect();
    let one = YoungDiagram::new(vec![1])?;
    for sigma in enumerate_rook(n) {
        let lhs = table.chi_star(&one, &sigma)? * table.chi_star(l, &sigma)?;
        let mut rhs = Rational::zero();
        for (m, mult) in out.iter() {
            rhs += table.chi_star(m, &sigma)? * rat(*mult as i64);
        }
        if lhs != rhs {
            return Err(Error::Verification(format!(
                "λ={l} n={n} σ={sigma}: χ*_(1)χ*_λ = {lhs} but the sum gives {rhs}"
            )));
        }
    }
    Ok(out)
}

fn check_bound(m: &PartitionMultiset, bound: usize) -> Result<()> {
    match m.iter().find(|(l, _)| l.size() > bound) {
        Some((l, _)) => Err(Error::InvalidInput(format!("{l} exceeds Λ_≤{bound}"))),
        None => Ok(()),
    }
}

/// Modified induction from ℂR_{n-1}: λ ↦ λ⁺.
pub fn mod_induce(m: &PartitionMultiset, n: usize) -> Result<PartitionMultiset> {
    check_bound(m, n.saturating_sub(1))?;
    let mut out = PartitionMultiset::new();
    for (l, mult) in m.iter() {
        for p in corner_set(l, CornerMode::PlusN, n) {
            out.insert(p, *mult);
        }
    }
    Ok(out)
}

/// Modified restriction to ℂR_{n-1}: λ ↦ λ⁻.
pub fn mod_restrict(m: &PartitionMultiset, n: usize) -> Result<PartitionMultiset> {
    check_bound(m, n)?;
    let mut out = PartitionMultiset::new();
    for (l, mult) in m.iter() {
        for p in corner_set(l, CornerMode::Minus, n) {
            out.insert(p, *mult);
        }
    }
    Ok(out)
}

/// Ordinary restriction to ℂR_{n-1}: λ ↦ λ^{-,=} ∩ Λ_{≤n-1}.
pub fn restrict(m: &PartitionMultiset, n: usize) -> Result<PartitionMultiset> {
    check_bound(m, n)?;
    let mut out = PartitionMultiset::new();
    for (l, mult) in m.iter() {
        for p in corner_set(l, CornerMode::MinusEq, n.saturating_sub(1)) {
            out.insert(p, *mult);
        }
    }
    Ok(out)
}

/// [λ ∈ μ⁺] = [μ ∈ λ⁻], compared as multiplicities of the two hom spaces.
pub fn check_frobenius(l: &YoungDiagram, mu: &YoungDiagram, n: usize) -> Result<bool> {
    if n == 0 || l.size() > n || mu.size() >= n {
        return Err(Error::InvalidInput("shapes out of range".into()));
    }
    let ind = mod_induce(&PartitionMultiset::singleton(mu.clone()), n)?.multiplicity(l);
    let res = mod_restrict(&PartitionMultiset::singleton(l.clone()), n)?.multiplicity(mu);
    Ok(ind == res)
}

/// Decomposition of (ℂⁿ)^{⊗k}: solve Σ_μ m_μ χ*_μ(σ) = (#fixed points of σ)^k over R_n.
pub fn tensor_multiplicities(n: usize, k: usize) -> Result<PartitionMultiset> {
    let shapes = partitions_upto(n);
    let elems = enumerate_rook(n);
    let mut table = CharacterTable::new();
    let mut rows = Vec::with_capacity(elems.len());
    let mut rhs = Vec::with_capacity(elems.len());
    for s in &elems {
        rows.push(
            shapes
                .iter()
                .map(|l| table.chi_star(l, s))
                .collect::<Result<Vec<_>>>()?,
        );
        rhs.push(rat((fixed_points(s) as i64).pow(k as u32)));
    }
    let a = ExactMatrix::from_rows(rows)?;
    let x = a
        .solve(&rhs)?
        .ok_or_else(|| Error::Verification("tensor character is not a combination of χ*".into()))?;
    let mut out = PartitionMultiset::new();
    for (l, m) in shapes.into_iter().zip(x) {
        if !m.is_integer() || m < Rational::zero() {
            return Err(Error::Verification(format!("non-integral multiplicity {m} for {l}")));
        }
        out.insert(l, usize::try_from(m.to_integer()).unwrap());
    }
    Ok(out)
}

/// (Ind ∘ Res)^k applied to {∅}.
pub fn tensor_by_ind_res(n: usize, k: usize) -> Result<PartitionMultiset> {
    let mut m = PartitionMultiset::singleton(YoungDiagram::empty());
    for _ in 0..k {
        m = mod_induce(&restrict(&m, n)?, n)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::{generator, GeneratorKind};

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn symmetric_values() {
        let id = RookElement::identity(3);
        assert_eq!(chi_sym(&yd("2,1"), &id).unwrap(), rat(2));
        let t = generator(GeneratorKind::S, 1, 2).unwrap();
        assert_eq!(chi_sym(&yd("1,1"), &t).unwrap(), rat(-1));
        let c3 = RookElement::from_pairs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(chi_sym(&yd("2,1"), &c3).unwrap(), rat(-1));
        assert!(chi_sym(&yd("2"), &id).is_err());
    }

    #[test]
    fn rook_values() {
        for s in enumerate_rook(3) {
            assert_eq!(chi_star(&yd(""), &s).unwrap(), rat(1));
            assert_eq!(chi_star(&yd("1"), &s).unwrap(), rat(fixed_points(&s) as i64));
        }
        assert_eq!(chi_star(&yd("2"), &RookElement::identity(3)).unwrap(), rat(3));
    }

    #[test]
    fn kronecker_examples() {
        let k = kronecker_with_defining(&yd(""), 2).unwrap();
        assert_eq!(k, [yd("1")].into_iter().collect());
        let k = kronecker_with_defining(&yd("1"), 2).unwrap();
        assert_eq!(k, [yd("1"), yd("2"), yd("1,1")].into_iter().collect());
        let k = kronecker_with_defining(&yd("2"), 3).unwrap();
        assert_eq!(k, [yd("2"), yd("1,1"), yd("3"), yd("2,1")].into_iter().collect());
        let k = kronecker_with_defining(&yd("2,1"), 3).unwrap();
        assert_eq!(k.multiplicity(&yd("2,1")), 2);
    }

    #[test]
    fn induce_restrict() {
        let e = PartitionMultiset::singleton(yd(""));
        assert_eq!(mod_induce(&e, 3).unwrap(), PartitionMultiset::singleton(yd("1")));
        assert_eq!(mod_restrict(&PartitionMultiset::singleton(yd("1")), 3).unwrap(), e);
        assert!(mod_induce(&PartitionMultiset::singleton(yd("3")), 3).is_err());
    }

    #[test]
    fn frobenius_examples() {
        assert!(check_frobenius(&yd("2"), &yd("1"), 3).unwrap());
        assert!(check_frobenius(&yd("1"), &yd("1"), 3).unwrap());
        assert!(check_frobenius(&yd(""), &yd(""), 3).unwrap());
    }

    #[test]
    fn tensor_small() {
        let m = tensor_multiplicities(2, 2).unwrap();
        assert_eq!(m.multiplicity(&yd("1")), 1);
        assert_eq!(m.multiplicity(&yd("2")), 1);
        assert_eq!(m.multiplicity(&yd("1,1")), 1);
        assert_eq!(tensor_by_ind_res(2, 2).unwrap(), m);
    }
}
