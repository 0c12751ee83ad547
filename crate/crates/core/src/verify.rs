//! Named identity checks.
//!
//! Each suite sweeps every input up to a degree bound and compares two sides
//! of an identity exactly. `max_degree` bounds the total degree (or total word
//! length) of the inputs, except for `beldend` and `tvidend`, where it bounds
//! each of the two inputs separately.

use std::fmt::Display;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use crate::composition::{compositions_up_to, Composition};
use crate::dendriform::{apply, belg, belg_chain, prec, preceq, succ, succeq, tvim, tvim_chain};
use crate::error::{Error, Result};
use crate::fqsym::{fq_op, from_wqsym, g_basis};
use crate::immaculate::{dual_immaculate_creation, dual_immaculate_tableaux, enumerate_tableaux};
use crate::nsym::{alternating_perp_sum, f_setminus, perp, ribbon, w, zabrocki_dual_immaculate};
use crate::ops::Op;
use crate::oracle::{
    expand_elem, expand_f, expand_word_elem, nc_series_op, series_op, TruncSeries, DEFAULT_D,
    DEFAULT_N, DEFAULT_NC_D, DEFAULT_NC_N,
};
use crate::qsym::{antipode, contract, coproduct, counit, e, fundamental, h, mul, QSymElem};
use crate::words::{PackedWord, Permutation};
use crate::wqsym::{
    packed_products, packed_products_naive, project, wq_belg_closed, wq_counit, wq_op, wq_op_elem,
    wq_tvim_closed, WQSymElem,
};

/// Registered suite names, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "beldend",
    "tvidend",
    "dendriform",
    "belg-assoc",
    "bel-F",
    "dual-immaculate-3way",
    "zabrocki",
    "hmDless",
    "analogue0",
    "analogue-minus",
    "omega",
    "wqsym-prod",
    "wqsym-five-ops",
    "fqsym-closure",
    "as2",
    "epilogue-chains",
    "antipode-axiom",
    "oracle-all",
];

/// Number of random linear combinations tried per suite when a seed is given.
pub const RANDOM_CASES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_degree: u32,
    pub with_oracle: bool,
    pub seed: Option<u64>,
    /// Also check `beldend` and the `hmDless` lemma at `a = b = 1`, where the
    /// identities as usually stated fail (`1 ≺ 1 = 0`, the other side is 1).
    pub literal: bool,
}

impl VerifyConfig {
    pub fn new(max_degree: u32) -> Self {
        Self {
            max_degree,
            with_oracle: false,
            seed: None,
            literal: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub degree: u32,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + Display>(
        &mut self,
        inputs: impl FnOnce() -> Value,
        expected: &T,
        actual: &T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                inputs: inputs(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

/// Runs one registered suite.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Report> {
    let mut r = Report {
        suite: name.to_string(),
        degree: cfg.max_degree,
        cases: 0,
        failures: Vec::new(),
    };
    let n = cfg.max_degree;
    match name {
        "beldend" => beldend(&mut r, n, cfg.literal),
        "tvidend" => tvidend(&mut r, n),
        "dendriform" => dendriform(&mut r, cfg),
        "belg-assoc" => belg_assoc(&mut r, cfg),
        "bel-F" => bel_f(&mut r, cfg),
        "dual-immaculate-3way" => three_way(&mut r, cfg),
        "zabrocki" => zabrocki(&mut r, cfg),
        "hmDless" => hm_dless(&mut r, n, cfg.literal),
        "analogue0" => analogue0(&mut r, n),
        "analogue-minus" => analogue_minus(&mut r, n),
        "omega" => omega(&mut r, n),
        "wqsym-prod" => wqsym_prod(&mut r, cfg),
        "wqsym-five-ops" => wqsym_five_ops(&mut r, cfg),
        "fqsym-closure" => fqsym_closure(&mut r, n),
        "as2" => as2(&mut r, cfg),
        "epilogue-chains" => epilogue_chains(&mut r, cfg),
        "antipode-axiom" => antipode_axiom(&mut r, n),
        "oracle-all" => oracle_all(&mut r, n),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite `{other}`; known suites: {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(r)
}

/// Runs every registered suite.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Report> {
    SUITES
        .iter()
        .map(|s| run_suite(s, cfg).expect("registered suite"))
        .collect()
}

fn m(a: &Composition) -> QSymElem {
    QSymElem::basis(a.clone())
}

fn comps(max: u32) -> Vec<Composition> {
    compositions_up_to(max).collect()
}

/// Pairs with `|α| + |β| ≤ total`.
fn pairs(total: u32) -> Vec<(Composition, Composition)> {
    let all = comps(total);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.size() + b.size() <= total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn triples(total: u32) -> Vec<[Composition; 3]> {
    let all = comps(total);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            for c in &all {
                if a.size() + b.size() + c.size() <= total {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

fn packed_up_to(total: u32) -> Vec<PackedWord> {
    (0..=total as usize)
        .flat_map(PackedWord::all_of_length)
        .collect()
}

fn word_pairs(total: u32) -> Vec<(PackedWord, PackedWord)> {
    let all = packed_up_to(total);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if u.len() + v.len() <= total as usize {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// A random integer combination of up to three `M_α` with `|α| ≤ max`.
fn random_elem(rng: &mut StdRng, pool: &[Composition]) -> QSymElem {
    let mut f = QSymElem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let a = &pool[rng.gen_range(0..pool.len())];
        f.add_term(a.clone(), BigInt::from(rng.gen_range(-3i32..=3)));
    }
    f
}

fn random_triples(cfg: &VerifyConfig) -> Vec<[QSymElem; 3]> {
    let Some(seed) = cfg.seed else {
        return Vec::new();
    };
    let mut rng = StdRng::seed_from_u64(seed);
    let pool = comps((cfg.max_degree / 3).max(1));
    (0..RANDOM_CASES)
        .map(|_| {
            [
                random_elem(&mut rng, &pool),
                random_elem(&mut rng, &pool),
                random_elem(&mut rng, &pool),
            ]
        })
        .collect()
}

fn show2(a: &impl Display, b: &impl Display) -> Value {
    json!({ "a": a.to_string(), "b": b.to_string() })
}

fn show3(a: &impl Display, b: &impl Display, c: &impl Display) -> Value {
    json!({ "a": a.to_string(), "b": b.to_string(), "c": c.to_string() })
}

/// `Σ_{(b)} op(S(b₁), a) · b₂`.
pub fn sweedler_sum(
    op: fn(&QSymElem, &QSymElem) -> QSymElem,
    a: &QSymElem,
    b: &QSymElem,
) -> QSymElem {
    contract(&coproduct(b), |b1| op(&antipode(&m(b1)), a), m)
}

fn beldend(r: &mut Report, n: u32, literal: bool) {
    let all = comps(n);
    for a in &all {
        for b in &all {
            // At a = b = 1 the left side is 1 but 1 ≺ 1 = 0.
            if a.is_empty() && b.is_empty() && !literal {
                continue;
            }
            let (fa, fb) = (m(a), m(b));
            r.check(
                || show2(&fa, &fb),
                &prec(&fa, &fb),
                &sweedler_sum(belg, &fa, &fb),
            );
        }
    }
}

fn tvidend(r: &mut Report, n: u32) {
    let all = comps(n);
    for a in &all {
        for b in &all {
            let (fa, fb) = (m(a), m(b));
            r.check(
                || show2(&fa, &fb),
                &preceq(&fa, &fb),
                &sweedler_sum(tvim, &fa, &fb),
            );
        }
    }
}

fn dendriform_triple(r: &mut Report, a: &QSymElem, b: &QSymElem, c: &QSymElem) {
    let inputs = || show3(a, b, c);
    let ab = mul(a, b);
    r.check(inputs, &ab, &(&prec(a, b) + &succeq(a, b)));
    r.check(inputs, &prec(a, &mul(b, c)), &prec(&prec(a, b), c));
    r.check(inputs, &succeq(a, &prec(b, c)), &prec(&succeq(a, b), c));
    r.check(inputs, &succeq(&ab, c), &succeq(a, &succeq(b, c)));
    r.check(inputs, &ab, &(&preceq(a, b) + &succ(a, b)));
    r.check(inputs, &preceq(a, &mul(b, c)), &preceq(&preceq(a, b), c));
    r.check(inputs, &succ(a, &preceq(b, c)), &preceq(&succ(a, b), c));
    r.check(inputs, &succ(&ab, c), &succ(a, &succ(b, c)));
}

fn oracle_pairs(r: &mut Report, ops: &[Op], total: u32) {
    let (n, d) = (DEFAULT_N, DEFAULT_D);
    let ex = |f: &QSymElem| expand_elem(f, n, d).unwrap();
    for (a, b) in pairs(total.min(d)) {
        let (fa, fb) = (m(&a), m(&b));
        for &op in ops {
            let want = series_op(op, &ex(&fa), &ex(&fb)).unwrap();
            let got = ex(&apply(op, &fa, &fb).unwrap());
            r.check(
                || json!({"op": op.name(), "a": fa.to_string(), "b": fb.to_string()}),
                &want.to_string(),
                &got.to_string(),
            );
        }
    }
}

fn dendriform(r: &mut Report, cfg: &VerifyConfig) {
    for [a, b, c] in triples(cfg.max_degree) {
        dendriform_triple(r, &m(&a), &m(&b), &m(&c));
    }
    for [a, b, c] in random_triples(cfg) {
        dendriform_triple(r, &a, &b, &c);
    }
    if cfg.with_oracle {
        oracle_pairs(
            r,
            &[Op::Mul, Op::Prec, Op::Succeq, Op::Preceq, Op::Succ],
            cfg.max_degree,
        );
    }
}

fn assoc_triple(r: &mut Report, a: &QSymElem, b: &QSymElem, c: &QSymElem) {
    let inputs = || show3(a, b, c);
    r.check(inputs, &belg(a, &belg(b, c)), &belg(&belg(a, b), c));
    r.check(inputs, &tvim(a, &tvim(b, c)), &tvim(&tvim(a, b), c));
}

fn belg_assoc(r: &mut Report, cfg: &VerifyConfig) {
    let one = QSymElem::one();
    for a in comps(cfg.max_degree) {
        let fa = m(&a);
        for op in [belg, tvim] {
            r.check(|| json!({"a": fa.to_string()}), &fa, &op(&one, &fa));
            r.check(|| json!({"a": fa.to_string()}), &fa, &op(&fa, &one));
        }
    }
    for [a, b, c] in triples(cfg.max_degree) {
        assoc_triple(r, &m(&a), &m(&b), &m(&c));
    }
    for [a, b, c] in random_triples(cfg) {
        assoc_triple(r, &a, &b, &c);
    }
    if cfg.with_oracle {
        oracle_pairs(r, &[Op::Belg, Op::Tvim], cfg.max_degree);
    }
}

fn bel_f(r: &mut Report, cfg: &VerifyConfig) {
    for (a, b) in pairs(cfg.max_degree) {
        let lhs = belg(&fundamental(&a), &fundamental(&b));
        r.check(
            || json!({"alpha": a.to_string(), "beta": b.to_string()}),
            &fundamental(&a.odot(&b)),
            &lhs,
        );
    }
    if cfg.with_oracle {
        for a in comps(cfg.max_degree.min(DEFAULT_D)) {
            let want = expand_f(&a, DEFAULT_N, DEFAULT_D).unwrap();
            let got = expand_elem(&fundamental(&a), DEFAULT_N, DEFAULT_D).unwrap();
            r.check(
                || json!({"alpha": a.to_string()}),
                &want.to_string(),
                &got.to_string(),
            );
        }
    }
}

fn generating_function_check(r: &mut Report, max: u32) {
    let n = 5;
    for a in comps(max.min(4)) {
        let mut series = TruncSeries::zero(n, 4);
        for t in enumerate_tableaux(&a, n as u32) {
            series.add_monomial(t.weight(n), BigInt::from(1));
        }
        let want = expand_elem(&dual_immaculate_tableaux(&a), n, 4).unwrap();
        r.check(
            || json!({"alpha": a.to_string()}),
            &want.to_string(),
            &series.to_string(),
        );
    }
}

fn three_way(r: &mut Report, cfg: &VerifyConfig) {
    for a in comps(cfg.max_degree) {
        let t = dual_immaculate_tableaux(&a);
        r.check(
            || json!({"alpha": a.to_string(), "method": "creation"}),
            &t,
            &dual_immaculate_creation(&a),
        );
        r.check(
            || json!({"alpha": a.to_string(), "method": "zabrocki"}),
            &t,
            &zabrocki_dual_immaculate(&a),
        );
    }
    if cfg.with_oracle {
        generating_function_check(r, cfg.max_degree);
    }
}

fn zabrocki(r: &mut Report, cfg: &VerifyConfig) {
    for a in comps(cfg.max_degree) {
        r.check(
            || json!({"alpha": a.to_string()}),
            &dual_immaculate_tableaux(&a),
            &zabrocki_dual_immaculate(&a),
        );
    }
    if cfg.with_oracle {
        generating_function_check(r, cfg.max_degree);
    }
}

fn hm_dless(r: &mut Report, n: u32, literal: bool) {
    for b in comps(n) {
        let fb = m(&b);
        for k in 1..=4 {
            r.check(
                || json!({"m": k, "f": fb.to_string()}),
                &prec(&h(k), &fb),
                &w(k, &fb).unwrap(),
            );
        }
    }
    for a in comps(n.min(4)) {
        let fa = m(&a);
        for b in comps(n) {
            // Same exceptional pair as in `beldend`.
            if a.is_empty() && b.is_empty() && !literal {
                continue;
            }
            let fb = m(&b);
            let lhs = alternating_perp_sum(&fb, |alpha| belg(&fundamental(alpha), &fa));
            r.check(|| show2(&fa, &fb), &prec(&fa, &fb), &lhs);
        }
    }
}

fn analogue0(r: &mut Report, n: u32) {
    for b in comps(n) {
        let fb = m(&b);
        let lhs = alternating_perp_sum(&fb, fundamental);
        r.check(
            || json!({"f": fb.to_string()}),
            &QSymElem::constant(counit(&fb)),
            &lhs,
        );
    }
}

fn analogue_minus(r: &mut Report, n: u32) {
    for b in comps(n) {
        let fb = m(&b);
        for k in 1..=3u32 {
            let sum = alternating_perp_sum(&fb, |alpha| f_setminus(alpha, k));
            let lhs = if k % 2 == 0 { sum } else { -sum };
            let rhs = QSymElem::constant(counit(&perp(&ribbon(Composition::ones(k)), &fb)));
            r.check(|| json!({"m": k, "f": fb.to_string()}), &rhs, &lhs);
        }
    }
}

fn omega(r: &mut Report, n: u32) {
    for a in comps(n) {
        r.check(|| json!({"alpha": a.to_string()}), &a, &a.omega().omega());
        r.check(
            || json!({"alpha": a.to_string()}),
            &a.size(),
            &a.omega().size(),
        );
    }
    for (a, b) in pairs(n) {
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let inputs = || json!({"alpha": a.to_string(), "beta": b.to_string()});
        r.check(inputs, &b.omega().odot(&a.omega()), &a.concat(&b).omega());
        r.check(inputs, &b.omega().concat(&a.omega()), &a.odot(&b).omega());
        let p = a.size();
        let (da, db) = (a.partial_sums().elems, b.partial_sums().elems);
        let shifted: Vec<u32> = db.iter().map(|x| x + p).collect();
        let mut odot_d: Vec<u32> = da.iter().copied().chain(shifted.iter().copied()).collect();
        odot_d.sort_unstable();
        let mut concat_d = odot_d.clone();
        concat_d.push(p);
        concat_d.sort_unstable();
        let got: Vec<u32> = a.odot(&b).partial_sums().elems.into_iter().collect();
        r.check(inputs, &format!("{odot_d:?}"), &format!("{got:?}"));
        let got: Vec<u32> = a.concat(&b).partial_sums().elems.into_iter().collect();
        r.check(inputs, &format!("{concat_d:?}"), &format!("{got:?}"));
    }
}

fn wqsym_prod(r: &mut Report, cfg: &VerifyConfig) {
    for (u, v) in word_pairs(cfg.max_degree) {
        let inputs = || json!({"u": u.to_string(), "v": v.to_string()});
        let mut fast = packed_products(&u, &v);
        fast.sort();
        r.check(
            inputs,
            &format!("{:?}", packed_products_naive(&u, &v)),
            &format!("{fast:?}"),
        );
    }
    if cfg.with_oracle {
        nc_oracle(r, &[Op::Mul], cfg.max_degree);
    }
}

fn nc_oracle(r: &mut Report, ops: &[Op], total: u32) {
    let (n, d) = (DEFAULT_NC_N, DEFAULT_NC_D);
    let ex = |f: &WQSymElem| expand_word_elem(f, n, d).unwrap();
    for (u, v) in word_pairs(total.min(d)) {
        let (eu, ev) = (
            ex(&WQSymElem::basis(u.clone())),
            ex(&WQSymElem::basis(v.clone())),
        );
        for &op in ops {
            let want = nc_series_op(op, &eu, &ev).unwrap();
            let got = ex(&wq_op(op, &u, &v));
            r.check(
                || json!({"op": op.name(), "u": u.to_string(), "v": v.to_string()}),
                &want.to_string(),
                &got.to_string(),
            );
        }
    }
}

fn wqsym_five_ops(r: &mut Report, cfg: &VerifyConfig) {
    for (u, v) in word_pairs(cfg.max_degree) {
        let inputs = || json!({"u": u.to_string(), "v": v.to_string()});
        let parts = wq_op(Op::Prec, &u, &v) + wq_op(Op::Circ, &u, &v) + wq_op(Op::Succ, &u, &v);
        r.check(inputs, &wq_op(Op::Mul, &u, &v), &parts);
        r.check(inputs, &wq_belg_closed(&u, &v), &wq_op(Op::Belg, &u, &v));
        r.check(inputs, &wq_tvim_closed(&u, &v), &wq_op(Op::Tvim, &u, &v));
        let (pu, pv) = (
            project(&WQSymElem::basis(u.clone())),
            project(&WQSymElem::basis(v.clone())),
        );
        for op in [Op::Mul, Op::Prec, Op::Belg, Op::Tvim] {
            r.check(
                inputs,
                &apply(op, &pu, &pv).unwrap(),
                &project(&wq_op(op, &u, &v)),
            );
        }
        r.check(inputs, &prec(&pu, &pv), &project(&wq_op(Op::Succ, &v, &u)));
        let succ_circ = wq_op(Op::Succ, &u, &v) + wq_op(Op::Circ, &u, &v);
        r.check(inputs, &succeq(&pu, &pv), &project(&succ_circ));
    }
    if cfg.with_oracle {
        nc_oracle(r, &Op::WQSYM, cfg.max_degree);
    }
}

fn fqsym_closure(r: &mut Report, n: u32) {
    for total in 0..=n as usize {
        for k in 0..=total {
            for s in Permutation::all_of_length(k) {
                for t in Permutation::all_of_length(total - k) {
                    for op in [Op::Succ, Op::Belg] {
                        let inputs = || json!({"op": op.name(), "sigma": s.to_string(), "tau": t.to_string()});
                        let lifted = wq_op_elem(op, &g_basis(&s), &g_basis(&t));
                        let want = fq_op(op, &s, &t).unwrap().to_string();
                        let got = from_wqsym(&lifted)
                            .map_or_else(|| format!("not in FQSym: {lifted}"), |g| g.to_string());
                        r.check(inputs, &want, &got);
                    }
                }
            }
        }
    }
}

fn as2(r: &mut Report, cfg: &VerifyConfig) {
    let all = packed_up_to(cfg.max_degree);
    let op = |o: Op, f: &WQSymElem, g: &WQSymElem| wq_op_elem(o, f, g);
    for a in &all {
        for b in &all {
            for c in &all {
                if (a.len() + b.len() + c.len()) as u32 > cfg.max_degree {
                    continue;
                }
                let (a, b, c) = (
                    WQSymElem::basis(a.clone()),
                    WQSymElem::basis(b.clone()),
                    WQSymElem::basis(c.clone()),
                );
                let inputs = || show3(&a, &b, &c);
                let lhs = op(Op::Tvim, &op(Op::Belg, &a, &b), &c)
                    + op(Op::Belg, &op(Op::Tvim, &a, &b), &c);
                let rhs = op(Op::Belg, &a, &op(Op::Tvim, &b, &c))
                    + op(Op::Tvim, &a, &op(Op::Belg, &b, &c));
                r.check(inputs, &lhs, &rhs);
                let eb = wq_counit(&b);
                let diff = op(Op::Tvim, &op(Op::Belg, &a, &b), &c)
                    - op(Op::Belg, &a, &op(Op::Tvim, &b, &c));
                r.check(
                    inputs,
                    &(op(Op::Tvim, &a, &c) - op(Op::Belg, &a, &c)).scale(&eb),
                    &diff,
                );
                let diff = op(Op::Belg, &op(Op::Tvim, &a, &b), &c)
                    - op(Op::Tvim, &a, &op(Op::Belg, &b, &c));
                r.check(
                    inputs,
                    &(op(Op::Belg, &a, &c) - op(Op::Tvim, &a, &c)).scale(&eb),
                    &diff,
                );
            }
        }
    }
}

fn epilogue_chains(r: &mut Report, cfg: &VerifyConfig) {
    for a in comps(cfg.max_degree) {
        let hs: Vec<QSymElem> = a.parts().iter().map(|&p| h(p)).collect();
        let es: Vec<QSymElem> = a.parts().iter().rev().map(|&p| e(p)).collect();
        r.check(
            || json!({"alpha": a.to_string(), "chain": "h"}),
            &fundamental(&a),
            &tvim_chain(&hs),
        );
        r.check(
            || json!({"alpha": a.to_string(), "chain": "e"}),
            &fundamental(&a.omega()),
            &belg_chain(&es),
        );
    }
}

fn antipode_axiom(r: &mut Report, n: u32) {
    for a in comps(n) {
        let f = m(&a);
        let d = coproduct(&f);
        let want = QSymElem::constant(counit(&f));
        r.check(
            || json!({"f": f.to_string(), "side": "left"}),
            &want,
            &contract(&d, |x| antipode(&m(x)), m),
        );
        r.check(
            || json!({"f": f.to_string(), "side": "right"}),
            &want,
            &contract(&d, m, |y| antipode(&m(y))),
        );
        let sign = if a.size() % 2 == 0 { 1 } else { -1 };
        r.check(
            || json!({"F": a.to_string()}),
            &fundamental(&a.omega()).scale(&BigInt::from(sign)),
            &antipode(&fundamental(&a)),
        );
    }
    for (a, b) in pairs(n) {
        let (fa, fb) = (m(&a), m(&b));
        r.check(
            || show2(&fa, &fb),
            &belg(&antipode(&fb), &antipode(&fa)),
            &antipode(&tvim(&fa, &fb)),
        );
    }
}

fn oracle_all(r: &mut Report, n: u32) {
    oracle_pairs(r, &Op::QSYM, n);
    let mut nc_ops = vec![Op::Mul];
    nc_ops.extend(Op::WQSYM);
    nc_oracle(r, &nc_ops, n);
}
