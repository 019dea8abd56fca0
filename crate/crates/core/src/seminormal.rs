//! Seminormal irreducible representations V^λ_n of ℂR_n on the Gelfand–Tsetlin basis.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{
    content, corner_set, partitions_upto, standard_tableaux, CornerMode, StandardTableau, YoungDiagram,
};
use crate::error::{Error, Result};
use crate::formal::FormalSum;
use crate::matrix::ExactMatrix;
use crate::rook::{
    enumerate_rook, factor_to_word, jm_x, jm_xtilde, Gen, GeneratorWord, RookAlgebraElement, RookElement,
};
use crate::scalar::{rat, Rational};

/// a = 1 / (ct(L(i+1)) - ct(L(i))).
fn axial(l: &StandardTableau, i: usize) -> Option<Rational> {
    let a = content(l.position(i)?);
    let b = content(l.position(i + 1)?);
    Some(Rational::one() / rat(b - a))
}

fn check_tableau(lambda: &YoungDiagram, n: usize, l: &StandardTableau) -> Result<()> {
    if &l.shape() != lambda || l.n() != n {
        return Err(Error::InvalidInput(format!("{l} is not in τ^{lambda}_{n}")));
    }
    Ok(())
}

/// s_i v_L.
pub fn act_si(
    lambda: &YoungDiagram,
    n: usize,
    i: usize,
    l: &StandardTableau,
) -> Result<FormalSum<StandardTableau, Rational>> {
    if i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("s_{i} for n={n}")));
    }
    check_tableau(lambda, n, l)?;
    let mut out = FormalSum::zero();
    match (l.contains(i), l.contains(i + 1)) {
        (true, true) => {
            let a = axial(l, i).expect("both letters present");
            out.add_term(l.clone(), a.clone());
            if let Some(t) = l.swap(i) {
                out.add_term(t, Rational::one() + a);
            }
        }
        (false, false) => out.add_term(l.clone(), rat(1)),
        _ => out.add_term(l.swap(i).expect("moving a lone letter keeps standardness"), rat(1)),
    }
    Ok(out)
}

/// P_1 v_L: v_L if 1 ∉ L, else 0.
pub fn act_p1(lambda: &YoungDiagram, n: usize, l: &StandardTableau) -> Result<FormalSum<StandardTableau, Rational>> {
    check_tableau(lambda, n, l)?;
    Ok(if l.contains(1) {
        FormalSum::zero()
    } else {
        FormalSum::basis(l.clone())
    })
}

/// V^λ_n with cached generator matrices (column convention: column j is the image of v_j).
#[derive(Clone, Debug)]
pub struct RookIrrep {
    lambda: YoungDiagram,
    n: usize,
    basis: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
    s: Vec<ExactMatrix>,
    p1: ExactMatrix,
}

impl RookIrrep {
    pub fn new(lambda: &YoungDiagram, n: usize) -> Result<Self> {
        let basis = standard_tableaux(lambda, n)?;
        let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let d = basis.len();
        let to_matrix =
            |f: &dyn Fn(&StandardTableau) -> Result<FormalSum<StandardTableau, Rational>>| -> Result<ExactMatrix> {
                let mut m = ExactMatrix::zeros(d, d);
                for (j, t) in basis.iter().enumerate() {
                    for (u, c) in &f(t)? {
                        m.set(index[u], j, c.clone());
                    }
                }
                Ok(m)
            };
        let s = (1..n)
            .map(|i| to_matrix(&|t| act_si(lambda, n, i, t)))
            .collect::<Result<Vec<_>>>()?;
        let p1 = to_matrix(&|t| act_p1(lambda, n, t))?;
        Ok(RookIrrep {
            lambda: lambda.clone(),
            n,
            basis,
            index,
            s,
            p1,
        })
    }

    pub fn lambda(&self) -> &YoungDiagram {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn generator_matrix(&self, g: Gen) -> Result<&ExactMatrix> {
        match g {
            Gen::P1 => Ok(&self.p1),
            Gen::S(i) if i >= 1 && i < self.n => Ok(&self.s[i - 1]),
            Gen::S(i) => Err(Error::OutOfRange(format!("s_{i} for n={}", self.n))),
        }
    }

    pub fn rep_word(&self, w: &GeneratorWord) -> Result<ExactMatrix> {
        w.tokens.iter().try_fold(ExactMatrix::identity(self.dim()), |acc, g| {
            acc.mul(self.generator_matrix(*g)?)
        })
    }

    pub fn rep_element(&self, rho: &RookElement) -> Result<ExactMatrix> {
        if rho.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: rho.n(),
            });
        }
        self.rep_word(&factor_to_word(rho))
    }

    pub fn rep_algebra(&self, x: &RookAlgebraElement) -> Result<ExactMatrix> {
        if x.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: x.n(),
            });
        }
        let mut m = ExactMatrix::zeros(self.dim(), self.dim());
        for (e, c) in x.sum() {
            m = m.add(&self.rep_element(e)?.scale(c))?;
        }
        Ok(m)
    }

    pub fn character(&self, rho: &RookElement) -> Result<Rational> {
        Ok(self.rep_element(rho)?.trace())
    }
}

/// Matrix of a rook element or algebra element in V^λ_n.
pub fn rep_matrix(lambda: &YoungDiagram, n: usize, x: &RookAlgebraElement) -> Result<ExactMatrix> {
    RookIrrep::new(lambda, n)?.rep_algebra(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct JmRow {
    pub lambda: String,
    pub tableau: String,
    pub i: usize,
    pub x_eig: String,
    pub xtilde_eig: String,
}

/// Checks X_i ↦ [i∈L] and X̃_i ↦ ct(L(i))·[i∈L] on every v_L; returns the eigenvalue table.
pub fn verify_jm_action(lambda: &YoungDiagram, n: usize) -> Result<Vec<JmRow>> {
    let irrep = RookIrrep::new(lambda, n)?;
    let mut rows = Vec::new();
    for i in 1..=n {
        let x = irrep.rep_algebra(&jm_x(i, n)?)?;
        let xt = irrep.rep_algebra(&jm_xtilde(i, n)?)?;
        if !x.is_diagonal() || !xt.is_diagonal() {
            return Err(Error::Verification(format!(
                "X_{i} or X~_{i} not diagonal on V^{lambda}_{n}"
            )));
        }
        for (j, l) in irrep.basis().iter().enumerate() {
            let (ex, ext) = match l.position(i) {
                Some(b) => (rat(1), rat(content(b))),
                None => (rat(0), rat(0)),
            };
            if x.get(j, j) != &ex || xt.get(j, j) != &ext {
                return Err(Error::Verification(format!(
                    "λ={lambda} n={n} L={l} i={i}: got ({}, {}), expected ({ex}, {ext})",
                    x.get(j, j),
                    xt.get(j, j)
                )));
            }
            rows.push(JmRow {
                lambda: lambda.to_string(),
                tableau: l.to_string(),
                i,
                x_eig: ex.to_string(),
                xtilde_eig: ext.to_string(),
            });
        }
    }
    Ok(rows)
}

/// Decomposes Res to ℂR_{n-1} from the module itself: the basis splits by the
/// box holding n, and each block is identified by its character on R_{n-1}.
/// Checked against λ^{-,=} ∩ Λ_{≤n-1}.
pub fn restriction_multiplicities(lambda: &YoungDiagram, n: usize) -> Result<Vec<YoungDiagram>> {
    if n == 0 {
        return Err(Error::InvalidInput("no restriction from R_0".into()));
    }
    let irrep = RookIrrep::new(lambda, n)?;
    let mut groups: Vec<(Option<crate::combinat::Cell>, Vec<usize>)> = Vec::new();
    for (j, l) in irrep.basis().iter().enumerate() {
        let key = l.position(n);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(j),
            None => groups.push((key, vec![j])),
        }
    }
    let sub = enumerate_rook(n - 1);
    let images: Vec<ExactMatrix> = sub
        .iter()
        .map(|r| irrep.rep_element(&r.extend()))
        .collect::<Result<_>>()?;
    let candidates: Vec<(YoungDiagram, Vec<Rational>)> = partitions_upto(n - 1)
        .into_iter()
        .map(|mu| {
            let ir = RookIrrep::new(&mu, n - 1)?;
            let chi = sub.iter().map(|r| ir.character(r)).collect::<Result<Vec<_>>>()?;
            Ok((mu, chi))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (_, idx) in &groups {
        for m in &images {
            let full = m.submatrix(&(0..irrep.dim()).collect::<Vec<_>>(), idx);
            let outside = (0..irrep.dim()).filter(|r| !idx.contains(r));
            if outside.into_iter().any(|r| full.row(r).iter().any(|v| !v.is_zero())) {
                return Err(Error::Verification("block not invariant under R_{n-1}".into()));
            }
        }
        let chi: Vec<Rational> = images.iter().map(|m| m.submatrix(idx, idx).trace()).collect();
        let mu = candidates
            .iter()
            .find(|(_, c)| *c == chi)
            .map(|(mu, _)| mu.clone())
            .ok_or_else(|| Error::Verification("restricted block is not irreducible".into()))?;
        out.push(mu);
    }
    out.sort();
    let expected = corner_set(lambda, CornerMode::MinusEq, n - 1);
    if out != expected {
        return Err(Error::Verification(format!(
            "Res V^{lambda}_{n} = {out:?}, branching rule gives {expected:?}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn tab(rows: Vec<Vec<usize>>, n: usize) -> StandardTableau {
        StandardTableau::from_rows(rows, n).unwrap()
    }

    #[test]
    fn si_cases() {
        let l = tab(vec![vec![1]], 2);
        let r = act_si(&yd("1"), 2, 1, &l).unwrap();
        assert_eq!(r.coeff(&tab(vec![vec![2]], 2)), rat(1));
        let l = tab(vec![vec![1, 2]], 2);
        assert_eq!(act_si(&yd("2"), 2, 1, &l).unwrap(), FormalSum::basis(l));
        let l = tab(vec![vec![1], vec![2]], 2);
        assert_eq!(act_si(&yd("1,1"), 2, 1, &l).unwrap(), FormalSum::term(l, rat(-1)));
        assert!(act_si(&yd("1"), 2, 2, &tab(vec![vec![1]], 2)).is_err());
    }

    #[test]
    fn p1_cases() {
        let l2 = tab(vec![vec![2]], 2);
        assert_eq!(act_p1(&yd("1"), 2, &l2).unwrap(), FormalSum::basis(l2));
        assert!(act_p1(&yd("1"), 2, &tab(vec![vec![1]], 2)).unwrap().is_zero());
        let e = tab(vec![], 3);
        assert_eq!(act_p1(&yd(""), 3, &e).unwrap(), FormalSum::basis(e));
    }

    #[test]
    fn s1_squares_to_one() {
        let ir = RookIrrep::new(&yd("2"), 2).unwrap();
        let s = ir.generator_matrix(Gen::S(1)).unwrap();
        assert_eq!(s.mul(s).unwrap(), ExactMatrix::identity(ir.dim()));
    }

    #[test]
    fn jm_table() {
        let rows = verify_jm_action(&yd("2"), 3).unwrap();
        let r = rows.iter().find(|r| r.tableau == "[1 3]" && r.i == 3).unwrap();
        assert_eq!(r.xtilde_eig, "1");
        let rows = verify_jm_action(&yd("1,1"), 2).unwrap();
        let r = rows.iter().find(|r| r.i == 2).unwrap();
        assert_eq!(r.xtilde_eig, "-1");
        assert!(verify_jm_action(&yd(""), 3)
            .unwrap()
            .iter()
            .all(|r| r.x_eig == "0" && r.xtilde_eig == "0"));
    }

    #[test]
    fn restrictions() {
        assert_eq!(restriction_multiplicities(&yd("1"), 2).unwrap(), vec![yd(""), yd("1")]);
        assert_eq!(restriction_multiplicities(&yd(""), 2).unwrap(), vec![yd("")]);
        assert_eq!(restriction_multiplicities(&yd("2"), 3).unwrap(), vec![yd("1"), yd("2")]);
    }
}
