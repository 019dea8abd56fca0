//! Numbered verification checks, grouped into suites for the command line.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bratteli::{ihat, rhat, rook_tower};
use crate::characters::{kronecker_with_table, tensor_multiplicities, CharacterTable};
use crate::combinat::{f_lambda, partitions_upto, stirling2, YoungDiagram};
use crate::diagram::{
    diagram_product, enumerate_monoid, from_orbit, orbit_product_general, orbit_product_tppa, to_orbit, AlgebraElement,
    Basis, MonoidKind,
};
use crate::error::{Error, Result};
use crate::jm::{gt_decompose, verify_centrality, verify_operator_identity};
use crate::level::Level;
use crate::rook::{
    enumerate_rook, generator, jm_x, jm_xtilde, kappa, kappa_tilde, relation_words, GeneratorKind, RookAlgebraElement,
};
use crate::rsk::{path_to_spt, spt_to_path, standard_spts};
use crate::seminormal::{verify_jm_action, RookIrrep};
use crate::tensor::schur_weyl_report;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: String,
    pub ok: bool,
    pub millis: u128,
    pub detail: Value,
}

/// Optional narrowing of the rook-side checks to a single n.
#[derive(Clone, Copy, Debug, Default)]
pub struct Scope {
    pub n: Option<usize>,
}

impl Scope {
    fn ns(&self, max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (1..=max).collect(),
        }
    }
}

fn timed(id: u32, name: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Check {
    let start = Instant::now();
    let (ok, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    Check {
        id,
        name: name.to_string(),
        ok,
        millis: start.elapsed().as_millis(),
        detail,
    }
}

pub fn dimension_identity(scope: Scope) -> Check {
    timed(1, "dimension identity", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for n in scope.ns(4) {
            let sum: usize = partitions_upto(n)
                .iter()
                .map(|l| RookIrrep::new(l, n).map(|r| r.dim() * r.dim()))
                .sum::<Result<usize>>()?;
            let order = enumerate_rook(n).len();
            ok &= sum == order;
            rows.push(json!({ "n": n, "sum_of_squares": sum, "monoid_order": order }));
        }
        Ok((ok, Value::Array(rows)))
    })
}

pub fn presentation_relations(scope: Scope) -> Check {
    timed(2, "presentation relations", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in scope.ns(4) {
            let rels = relation_words(n);
            let irreps: Vec<RookIrrep> = partitions_upto(n)
                .iter()
                .map(|l| RookIrrep::new(l, n))
                .collect::<Result<_>>()?;
            for (name, lhs, rhs) in &rels {
                count += 1;
                if lhs.evaluate(n)? != rhs.evaluate(n)? {
                    failures.push(format!("n={n} monoid {name}"));
                }
                for r in &irreps {
                    if r.rep_word(lhs)? != r.rep_word(rhs)? {
                        failures.push(format!("n={n} λ={} {name}", r.lambda()));
                    }
                }
            }
        }
        Ok((failures.is_empty(), json!({ "relations": count, "failures": failures })))
    })
}

pub fn jm_diagonal_action(scope: Scope) -> Check {
    timed(3, "JM elements act diagonally on GT vectors", || {
        let mut vectors = 0;
        for n in scope.ns(4) {
            for l in partitions_upto(n) {
                vectors += verify_jm_action(&l, n)?.len();
            }
        }
        Ok((true, json!({ "eigenvalue_checks": vectors })))
    })
}

pub fn jm_commutation(scope: Scope) -> Check {
    timed(4, "kappa central, JM elements commute", || {
        let mut failures = Vec::new();
        for n in scope.ns(4) {
            let mut gens = vec![RookAlgebraElement::from_element(generator(GeneratorKind::P, 1, n)?)];
            for i in 1..n {
                gens.push(RookAlgebraElement::from_element(generator(GeneratorKind::S, i, n)?));
            }
            for (name, c) in [("kappa", kappa(n)?), ("kappa~", kappa_tilde(n)?)] {
                for (j, g) in gens.iter().enumerate() {
                    if !c.commutes_with(g)? {
                        failures.push(format!("n={n} {name} vs generator {j}"));
                    }
                }
            }
            let mut xs = Vec::new();
            for i in 1..=n {
                xs.push((format!("X{i}"), jm_x(i, n)?));
                xs.push((format!("X~{i}"), jm_xtilde(i, n)?));
            }
            for (a, (na, xa)) in xs.iter().enumerate() {
                for (nb, xb) in &xs[a + 1..] {
                    if !xa.commutes_with(xb)? {
                        failures.push(format!("n={n} {na} vs {nb}"));
                    }
                }
            }
        }
        Ok((failures.is_empty(), json!({ "failures": failures })))
    })
}

pub fn character_identity(scope: Scope) -> Check {
    timed(5, "character product identity", || {
        let mut rows = Vec::new();
        for n in scope.ns(4) {
            let mut table = CharacterTable::new();
            for l in partitions_upto(n) {
                let m = kronecker_with_table(&l, n, &mut table)?;
                rows.push(json!({ "n": n, "lambda": l.to_string(), "terms": m.to_string() }));
            }
        }
        Ok((true, Value::Array(rows)))
    })
}

/// Paths in R̂(n), S(k,|λ|) f^λ and the character solve, for one λ.
pub fn multiplicity_three_ways(l: &YoungDiagram, k: usize, n: usize) -> Result<(u128, u128, u128)> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidInput("need n, k >= 1".into()));
    }
    if l.size() > n {
        return Err(Error::InvalidInput(format!("|{l}| > n = {n}")));
    }
    let g = rhat(n, k);
    let one = YoungDiagram::new(vec![1])?;
    let paths = if g.vertex_index(k - 1, l).is_some() {
        g.count_paths((Level::integer(1), &one), (Level::integer(k as u32), l))?
    } else {
        0
    };
    let formula = stirling2(k, l.size()) * f_lambda(l);
    let character = tensor_multiplicities(n, k)?.multiplicity(l) as u128;
    Ok((paths, formula, character))
}

pub fn multiplicity_agreement() -> Check {
    timed(6, "tensor multiplicity three ways", || {
        let n = 3;
        let mut rows = Vec::new();
        let mut ok = true;
        for k in 1..=4 {
            for l in partitions_upto(n) {
                let (p, f, c) = multiplicity_three_ways(&l, k, n)?;
                ok &= p == f && f == c;
                rows.push(json!({ "k": k, "lambda": l.to_string(), "paths": p, "formula": f, "character": c }));
            }
        }
        let (p, _, _) = multiplicity_three_ways(&YoungDiagram::new(vec![2])?, 3, 3)?;
        ok &= p == 3;
        Ok((ok, Value::Array(rows)))
    })
}

pub fn rsk_bijection() -> Check {
    timed(7, "RSK path bijection", || {
        let mut ok = true;
        let g3 = rhat(3, 3);
        let parse = |s: &str| s.parse::<YoungDiagram>();
        let worked = [
            (["1", "2", "1,1"], "[[[1]],[[2,3]]]"),
            (["1", "1,1", "1,1"], "[[[2]],[[1,3]]]"),
            (["1", "1", "1,1"], "[[[1,2]],[[3]]]"),
        ];
        for (shapes, expected) in worked {
            let shapes: Vec<YoungDiagram> = shapes.iter().map(|s| parse(s)).collect::<Result<_>>()?;
            let p = g3.path_from_shapes(Level::integer(1), &shapes)?;
            let t = path_to_spt(&p)?;
            ok &= t.to_string() == expected && spt_to_path(&t, 3)? == p;
        }
        let g = rhat(4, 4);
        let one = YoungDiagram::new(vec![1])?;
        let mut total = 0;
        for l in &g.vertices[3] {
            let paths = g.enumerate_paths((Level::integer(1), &one), (Level::integer(4), l), u128::MAX)?;
            let mut tabs = Vec::with_capacity(paths.len());
            for p in &paths {
                let t = path_to_spt(p)?;
                ok &= &spt_to_path(&t, 4)? == p;
                tabs.push(t);
            }
            tabs.sort();
            ok &= tabs == standard_spts(l, 4)?;
            total += paths.len();
        }
        Ok((ok, json!({ "paths_checked": total })))
    })
}

pub fn orbit_product_check() -> Check {
    timed(8, "orbit product against change of basis", || {
        let a2 = enumerate_monoid(MonoidKind::Partition, 2)?;
        let mut pairs = 0;
        let mut failures = Vec::new();
        for d1 in &a2 {
            for d2 in &a2 {
                let x1 = AlgebraElement::basis_element(d1.clone(), Basis::Orbit);
                let x2 = AlgebraElement::basis_element(d2.clone(), Basis::Orbit);
                let direct = orbit_product_general(&x1, &x2)?;
                let via = to_orbit(&diagram_product(&from_orbit(&x1), &from_orbit(&x2))?);
                pairs += 1;
                if direct != via {
                    failures.push(format!("{d1} * {d2}"));
                } else if d1.is_totally_propagating()
                    && d2.is_totally_propagating()
                    && orbit_product_tppa(&x1, &x2)? != direct
                {
                    failures.push(format!("tppa rule {d1} * {d2}"));
                }
            }
        }
        Ok((failures.is_empty(), json!({ "pairs": pairs, "failures": failures })))
    })
}

pub fn schur_weyl() -> Check {
    timed(9, "Schur-Weyl kernel and commutant", || {
        let cases = [
            (2, 2, false),
            (3, 2, false),
            (2, 3, false),
            (3, 3, false),
            (2, 1, true),
            (3, 2, true),
        ];
        let mut ok = true;
        let mut rows = Vec::new();
        for (n, k, half) in cases {
            let r = schur_weyl_report(n, k, half)?;
            ok &= r.ok;
            rows.push(serde_json::to_value(&r).expect("serializable"));
        }
        let r = schur_weyl_report(2, 3, false)?;
        ok &= r.kernel_dim == 6;
        Ok((ok, Value::Array(rows)))
    })
}

pub fn operator_identities() -> Check {
    timed(10, "JM sums equal kappa on tensor space", || {
        let mut ok = true;
        let mut rows = Vec::new();
        for k in 1..=3u32 {
            for n in (k as usize)..=4 {
                let r = verify_operator_identity(n, Level::integer(k))?;
                ok &= r.ok;
                rows.push(serde_json::to_value(&r).expect("serializable"));
                if n > k as usize {
                    let r = verify_operator_identity(n, Level::half(k))?;
                    ok &= r.ok;
                    rows.push(serde_json::to_value(&r).expect("serializable"));
                }
            }
        }
        Ok((ok, Value::Array(rows)))
    })
}

pub fn centrality() -> Check {
    timed(11, "centrality and commuting JM elements", || {
        let mut ok = true;
        let mut rows = Vec::new();
        for t in Level::half(3).up_to() {
            let r = verify_centrality(t)?;
            ok &= r.ok;
            rows.push(serde_json::to_value(&r).expect("serializable"));
        }
        Ok((ok, Value::Array(rows)))
    })
}

pub fn gelfand_tsetlin() -> Check {
    timed(12, "Gelfand-Tsetlin eigenspaces", || {
        let mut ok = true;
        let mut rows = Vec::new();
        for t in Level::half(2).up_to() {
            let n = t.ceil() as usize + 1;
            let r = gt_decompose(t, n)?;
            ok &= r.ok;
            rows.push(json!({
                "level": r.level,
                "n": n,
                "paths": r.rows.len(),
                "space_dim": r.space_dim,
                "exhausts": r.exhausts,
                "tuples_distinct": r.tuples_distinct,
                "mtilde_separates": r.mtilde_separates,
                "branching_consistent": r.branching_consistent,
            }));
        }
        Ok((ok, Value::Array(rows)))
    })
}

pub fn figures() -> Check {
    timed(13, "Bratteli figures", || {
        let yd = |s: &str| s.parse::<YoungDiagram>();
        let counts = |g: &crate::bratteli::GradedGraph| g.vertices.iter().map(Vec::len).collect::<Vec<_>>();
        let rt = rook_tower(3);
        let rh = rhat(3, 3);
        let ih = ihat(Level::integer(3));
        let mut ok = counts(&rt) == [1, 2, 4, 7] && rt.edge_count() == 18;
        ok &= rt.up_neighbors(2, &yd("")?) == vec![yd("")?, yd("1")?];
        ok &= counts(&rh) == [1, 3, 6] && rh.edge_count() == 14;
        let mut up = rh.up_neighbors(1, &yd("1,1")?);
        up.sort();
        up.dedup();
        ok &= up == vec![yd("2")?, yd("1,1")?, yd("2,1")?, yd("1,1,1")?];
        ok &= counts(&ih) == [1, 1, 2, 3, 4, 6] && ih.edge_count() == 19;
        let li = ih.level_index(Level::half(2)).expect("level present");
        ok &= ih.vertices[li] == vec![yd("")?, yd("1")?, yd("2")?, yd("1,1")?];
        ok &= ih.edges_between(li, &yd("")?, &yd("1")?).len() == 1;
        ok &= ih.edges_between(li, &yd("")?, &yd("2")?).is_empty();
        ok &= rt.is_simple() && ih.is_simple();
        Ok((
            ok,
            json!({
                "rook_tower": { "vertices": counts(&rt), "edges": rt.edge_count() },
                "rhat": { "vertices": counts(&rh), "edges": rh.edge_count() },
                "ihat": { "vertices": counts(&ih), "edges": ih.edge_count() },
            }),
        ))
    })
}

pub fn bratteli_dimensions() -> Check {
    timed(14, "Bratteli dimension recursion", || {
        let g = ihat(Level::integer(4));
        let empty = YoungDiagram::empty();
        let mut ok = true;
        let mut rows = Vec::new();
        let mut prev: Vec<(YoungDiagram, u128)> = Vec::new();
        for (li, &t) in g.levels.iter().enumerate() {
            let counts = g.path_counts((Level::HALF, &empty), t)?;
            if li > 0 {
                for (l, c) in &counts {
                    let down: u128 = g
                        .down_neighbors(li, l)
                        .iter()
                        .map(|m| prev.iter().find(|(p, _)| p == m).map_or(0, |(_, c)| *c))
                        .sum();
                    ok &= down == *c;
                }
            }
            let squares: u128 = counts.iter().map(|(_, c)| c * c).sum();
            let order = if t == Level::HALF {
                1
            } else if t.is_integer() {
                enumerate_monoid(MonoidKind::TotallyPropagating, t.floor() as usize)?.len()
            } else {
                enumerate_monoid(MonoidKind::HalfTotallyPropagating, t.floor() as usize)?.len()
            };
            ok &= squares == order as u128;
            if t.is_integer() {
                let k = t.floor() as usize;
                for (l, c) in &counts {
                    ok &= *c == stirling2(k, l.size()) * f_lambda(l);
                }
            }
            rows.push(json!({ "level": t.to_string(), "sum_of_squares": squares, "algebra_dim": order }));
            prev = counts;
        }
        Ok((ok, Value::Array(rows)))
    })
}

pub const SUITES: &[&str] = &[
    "rook",
    "characters",
    "bijection",
    "orbit",
    "schur-weyl",
    "jm",
    "bratteli",
    "all",
];

/// Runs a named suite; `scope` narrows the rook-side checks.
pub fn run_suite(name: &str, scope: Scope) -> Result<Vec<Check>> {
    let out = match name {
        "rook" => vec![
            dimension_identity(scope),
            presentation_relations(scope),
            jm_diagonal_action(scope),
            jm_commutation(scope),
        ],
        "characters" => vec![character_identity(scope)],
        "bijection" => vec![multiplicity_agreement(), rsk_bijection()],
        "orbit" => vec![orbit_product_check()],
        "schur-weyl" => vec![schur_weyl()],
        "jm" => vec![operator_identities(), centrality(), gelfand_tsetlin()],
        "bratteli" => vec![figures(), bratteli_dimensions()],
        "all" => all_criteria(),
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {name}; expected one of {SUITES:?}"
            )))
        }
    };
    Ok(out)
}

pub fn all_criteria() -> Vec<Check> {
    let s = Scope::default();
    vec![
        dimension_identity(s),
        presentation_relations(s),
        jm_diagonal_action(s),
        jm_commutation(s),
        character_identity(s),
        multiplicity_agreement(),
        rsk_bijection(),
        orbit_product_check(),
        schur_weyl(),
        operator_identities(),
        centrality(),
        gelfand_tsetlin(),
        figures(),
        bratteli_dimensions(),
    ]
}
