//! Check jobs for every subcommand. Each job is independent and returns its verdict and witness.

use std::time::Instant;

use rayon::prelude::*;

use mck_core::exact::{frac, int};
use mck_core::fano::{
    dim_rfxf_bound, r_formula, r_vector, recurrence_check, solve_socle_relation, FanoContext,
    RecurrenceReport, RecurrenceRun,
};
use mck_core::hodge::{
    gs_fano_poincare, hdg_count_f, hdg_count_fxf, hypersurface_diamond, kuechle_c7_diamond,
    verify_gsv_identity, HodgeDiamond,
};
use mck_core::motive::bundle::{bd_pairing_check, LineStatus};
use mck_core::motive::franchetta::franchetta_rank_check;
use mck_core::motive::gamma3::{gamma3_consequences, validate_in_model, Assignment, Gamma3Context};
use mck_core::motive::projectors::{
    ck_projectors_cubic, diagonal_self_intersection, mck_sweep, verify_ck_axioms,
    verify_self_duality, MckEngine,
};
use mck_core::motive::CohModel;
use mck_core::schubert::{gc_monomial, verify_presentation};

use crate::report::{Check, Entry, Verdict};

pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Vec<Entry>,
}

impl Outcome {
    fn new(verdict: Verdict, witness: Vec<Entry>) -> Self {
        Outcome { verdict, witness }
    }

    fn skipped(reason: impl ToString) -> Self {
        Outcome::new(Verdict::Skipped(reason.to_string()), vec![])
    }

    fn failed(reason: impl ToString) -> Self {
        Outcome::new(Verdict::Fail(reason.to_string()), vec![])
    }
}

type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Job {
    name: String,
    inputs: Vec<Entry>,
    run: Runner,
}

impl Job {
    fn new(
        name: impl Into<String>,
        inputs: Vec<Entry>,
        run: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Job {
            name: name.into(),
            inputs,
            run: Box::new(run),
        }
    }

    fn prefixed(mut self, prefix: &str) -> Self {
        self.name = format!("{prefix}.{}", self.name);
        self
    }
}

/// Runs the jobs on the current rayon pool; the output keeps the input order.
pub fn run_jobs(jobs: Vec<Job>) -> Vec<Check> {
    jobs.into_par_iter()
        .map(|job| {
            let start = Instant::now();
            let out = (job.run)();
            Check {
                name: job.name,
                inputs: job.inputs,
                verdict: out.verdict,
                witness: out.witness,
                millis: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}

fn n_input(n: u32) -> Vec<Entry> {
    vec![Entry::new("n", n)]
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

// Schubert calculus.

pub fn schubert_product(m: u32, a: u32, b: u32) -> Job {
    let inputs = vec![
        Entry::new("m", m),
        Entry::new("monomial", mck_core::schubert::gc_symbol(a, b)),
    ];
    Job::new("schubert.product", inputs, move || {
        let e = gc_monomial(a, b, m);
        Outcome::new(
            Verdict::Pass,
            vec![
                Entry::new("expansion", &e),
                Entry::new("degree", e.degree()),
            ],
        )
    })
}

fn schubert_golden() -> Job {
    Job::new("schubert.golden", vec![Entry::new("m", 6)], || {
        let mut witness = Vec::new();
        let mut bad = Vec::new();
        for (a, b, want) in [(8, 0, 14), (6, 1, 5), (4, 2, 2)] {
            let got = gc_monomial(a, b, 6).degree();
            if got != int(want) {
                bad.push(format!("g^{a}c^{b}"));
            }
            witness.push(Entry::new(
                format!("deg {}", mck_core::schubert::gc_symbol(a, b)),
                got,
            ));
        }
        let f = FanoContext::new(4).expect("n = 4").degree_f(4, 0);
        if f != int(108) {
            bad.push("deg_F g^4".into());
        }
        witness.push(Entry::new("deg_F g^4 (n=4)", f));
        Outcome::new(
            Verdict::from_bool(bad.is_empty(), || format!("wrong: {}", bad.join(", "))),
            witness,
        )
    })
}

fn presentation(n: u32) -> Job {
    Job::new(
        "schubert.presentation",
        n_input(n),
        move || match verify_presentation(n) {
            Ok(r) => Outcome::new(
                Verdict::from_bool(r.holds(), || "relations do not present CH*(G)".into()),
                vec![
                    Entry::new("R_{n+1}", &r.relations.0),
                    Entry::new("R_{n+2}", &r.relations.1),
                    Entry::new("vanish", r.relations_vanish),
                    Entry::new("schubert counts", tuple(&r.schubert_counts())),
                ],
            ),
            Err(e) => Outcome::failed(e),
        },
    )
}

// Tautological ring of F.

pub fn fano_hilbert(n: u32) -> Job {
    Job::new("fano.hilbert", n_input(n), move || {
        let ctx = match FanoContext::new(n) {
            Ok(c) => c,
            Err(e) => return Outcome::skipped(e),
        };
        let h = ctx.hilbert_function();
        let r = r_vector(n).expect("n >= 3");
        Outcome::new(
            Verdict::from_bool(h.as_slice() == r.as_slice(), || {
                "Hilbert function differs from r_i".into()
            }),
            vec![Entry::new("computed", &h), Entry::new("r_i", tuple(&r))],
        )
    })
}

pub fn fano_socle(n: u32) -> Job {
    Job::new(
        "fano.socle",
        n_input(n),
        move || match solve_socle_relation(n) {
            Ok(rel) => {
                let residual = rel.residual();
                let lead = rel.poly.coefficient(n - 1, 0);
                let ok = residual.is_zero() && lead != int(0);
                Outcome::new(
                    Verdict::from_bool(ok, || format!("P·[F] = {residual}")),
                    vec![
                        Entry::new("P", &rel.poly),
                        Entry::new("P·[F]", residual),
                        Entry::new("kernel dimension", 1),
                    ],
                )
            }
            Err(e) => Outcome::skipped(e),
        },
    )
}

pub fn bd_pairing(n: u32) -> Job {
    Job::new("fano.bd-pairing", n_input(n), move || {
        let r = bd_pairing_check(n);
        let mut witness = Vec::new();
        let mut failed = Vec::new();
        for (i, line) in r.lines.iter().enumerate() {
            let status = match &line.status {
                LineStatus::Derived => "derived".to_string(),
                LineStatus::Skipped(why) => format!("skipped ({why})"),
                LineStatus::Failed(why) => {
                    failed.push(why.clone());
                    format!("failed ({why})")
                }
            };
            witness.push(Entry::new(
                format!("{:02}", i + 1),
                format!("{} [{status}]", line.statement),
            ));
        }
        Outcome::new(
            Verdict::from_bool(failed.is_empty(), || failed.join("; ")),
            witness,
        )
    })
}

fn run_table(run: &RecurrenceRun) -> Vec<Entry> {
    run.a
        .iter()
        .zip(&run.p)
        .enumerate()
        .map(|(i, (a, p))| Entry::new(format!("p_{}", i + 1), format!("{p} (a_{} = {a})", i + 2)))
        .chain(std::iter::once(Entry::new(
            "a_{m+2}",
            run.a.last().expect("nonempty"),
        )))
        .collect()
}

pub fn fano_recurrence(n: u32) -> Job {
    Job::new("fano.recurrence", n_input(n), move || {
        let rec = match recurrence_check(n) {
            Ok(r) => r,
            Err(e) => return Outcome::skipped(e),
        };
        let e = &rec.expanded;
        let mut witness = run_table(e);
        witness.push(Entry::new("a_j integral", e.a_integral));
        witness.push(Entry::new("p_j non-integral for j >= 2", e.p_nonintegral));
        witness.push(Entry::new("p_m ≠ a_{m+2}", e.contradiction));
        Outcome::new(
            Verdict::from_bool(rec.argument_holds(), || {
                "non-divisibility argument does not close".into()
            }),
            witness,
        )
    })
}

/// The closed form (-1)^j C(n+1-j, j-1) with p₁ = (n-1)/2, p₂ = -(n²-4n+5)/4.
pub fn fano_recurrence_closed_form(n: u32) -> Job {
    Job::new("fano.recurrence.closed-form", n_input(n), move || {
        let rec = match recurrence_check(n) {
            Ok(r) => r,
            Err(e) => return Outcome::skipped(e),
        };
        let mut witness = run_table(&rec.closed_form);
        witness.push(Entry::new("stated p_1", rec.expected_p1()));
        witness.push(Entry::new("stated p_2", rec.expected_p2()));
        witness.push(Entry::new("expanded a_j", tuple(&rec.expanded.a)));
        let mut problems = Vec::new();
        if !rec.closed_form_matches_expansion() {
            let js: Vec<String> = rec
                .closed_form
                .a
                .iter()
                .zip(&rec.expanded.a)
                .enumerate()
                .filter(|(_, (c, x))| c != x)
                .map(|(i, _)| (i + 2).to_string())
                .collect();
            problems.push(format!(
                "closed-form a_j differs from the expansion of (x²-y)R_{{n+1}} - xR_{{n+2}} at j = {}",
                js.join(",")
            ));
        }
        if !RecurrenceReport::matches_stated_values(&rec.expanded, n) {
            problems.push(format!(
                "the expansion gives p_1 = {}, not {}",
                rec.expanded.p[0],
                frac(n as i64 - 1, 2)
            ));
        }
        Outcome::new(
            Verdict::from_bool(problems.is_empty(), || problems.join("; ")),
            witness,
        )
    })
}

pub fn fano_dims_f(n: u32) -> Job {
    Job::new("fano.dims.F", n_input(n), move || {
        if n < 3 {
            return Outcome::skipped(format!("n = {n} is below 3"));
        }
        let mut witness = Vec::new();
        let mut bad = Vec::new();
        for k in 0..=2 * n - 4 {
            match (hdg_count_f(k, n), r_formula(k, n)) {
                (Ok(h), Ok(r)) => {
                    if h != r {
                        bad.push(k);
                    }
                    witness.push(Entry::new(format!("k={k}"), format!("hdg {h}, r_k {r}")));
                }
                (Err(e), _) => return Outcome::failed(e),
                (_, Err(e)) => return Outcome::failed(e),
            }
        }
        Outcome::new(
            Verdict::from_bool(bad.is_empty(), || format!("mismatch at k = {bad:?}")),
            witness,
        )
    })
}

pub fn fano_dims_fxf(n: u32) -> Job {
    Job::new("fano.dims.FxF", n_input(n), move || {
        if n < 3 {
            return Outcome::skipped(format!("n = {n} is below 3"));
        }
        let mut witness = Vec::new();
        let mut bad = Vec::new();
        for k in 0..=4 * n - 8 {
            let bound = dim_rfxf_bound(k, n).expect("k in range");
            match hdg_count_fxf(k, n) {
                Ok(h) => {
                    if h != bound {
                        bad.push(k);
                    }
                    witness.push(Entry::new(
                        format!("k={k}"),
                        format!("hdg {h}, bound {bound}"),
                    ));
                }
                Err(e) => {
                    bad.push(k);
                    witness.push(Entry::new(format!("k={k}"), e));
                }
            }
        }
        Outcome::new(
            Verdict::from_bool(bad.is_empty(), || format!("mismatch at k = {bad:?}")),
            witness,
        )
    })
}

// Correspondences.

pub fn mck_ck_axioms(n: u32) -> Job {
    Job::new("mck.ck-axioms", n_input(n), move || {
        let ps = match ck_projectors_cubic(n) {
            Ok(p) => p,
            Err(e) => return Outcome::failed(e),
        };
        match verify_ck_axioms(&ps) {
            Ok(r) => Outcome::new(
                Verdict::from_bool(r.holds(), || r.failures.join("; ")),
                vec![
                    Entry::new("identities checked", r.checks),
                    Entry::new(
                        "π^0",
                        ps.class(0)
                            .map(|c| c.render(ps.model()))
                            .unwrap_or_default(),
                    ),
                ],
            ),
            Err(e) => Outcome::failed(e),
        }
    })
}

pub fn mck_self_duality(n: u32) -> Job {
    Job::new(
        "mck.self-duality",
        n_input(n),
        move || match ck_projectors_cubic(n) {
            Ok(ps) => Outcome::new(
                Verdict::from_bool(verify_self_duality(&ps), || "π^i ≠ ᵗπ^{2n-i}".into()),
                vec![Entry::new("projectors", ps.len())],
            ),
            Err(e) => Outcome::failed(e),
        },
    )
}

pub fn mck_sweep_job(n: u32) -> Job {
    Job::new("mck.sweep", n_input(n), move || {
        let ps = match ck_projectors_cubic(n) {
            Ok(p) => p,
            Err(e) => return Outcome::failed(e),
        };
        match mck_sweep(&ps) {
            Ok(s) => Outcome::new(
                Verdict::from_bool(s.holds(), || format!("failing triples {:?}", s.failures)),
                vec![
                    Entry::new("triples", s.triples),
                    Entry::new("vanishing (k ≠ i+j)", s.vanishing),
                    Entry::new("sum-degree identity checked", s.sum_degree_checked),
                    Entry::new("failures", s.failures.len()),
                    Entry::new("level", "cohomological realization"),
                ],
            ),
            Err(e) => Outcome::failed(e),
        }
    })
}

pub fn mck_triple(n: u32, (i, j, k): (usize, usize, usize)) -> Job {
    let inputs = vec![
        Entry::new("n", n),
        Entry::new("triple", format!("{i},{j},{k}")),
    ];
    Job::new("mck.obstruction", inputs, move || {
        let ps = match ck_projectors_cubic(n) {
            Ok(p) => p,
            Err(e) => return Outcome::failed(e),
        };
        let o = match MckEngine::new(&ps).obstruction(i, j, k) {
            Ok(o) => o,
            Err(e) => return Outcome::failed(e),
        };
        let model = ps.model();
        let status = match o.sum_degree {
            Some(true) => "sum-degree identity verified",
            Some(false) => "sum-degree identity fails",
            None if o.vanishes() => "vanishes",
            None => "does not vanish",
        };
        Outcome::new(
            Verdict::from_bool(o.passes(), || status.into()),
            vec![
                Entry::new("status", status),
                Entry::new("π^k∘δ∘(π^i⊗π^j)", o.class.tensor().render(model)),
                Entry::new("symmetrized", o.symmetrized.tensor().render(model)),
            ],
        )
    })
}

pub fn diagonal_gate(n: u32) -> Job {
    Job::new("mck.diagonal-self-intersection", n_input(n), move || {
        let model = match CohModel::cubic(n) {
            Ok(m) => m,
            Err(e) => return Outcome::failed(e),
        };
        let dd = diagonal_self_intersection(&model);
        let chi = model.euler_characteristic();
        Outcome::new(
            Verdict::from_bool(dd == int(chi), || format!("deg(Δ·Δ) = {dd}, χ = {chi}")),
            vec![Entry::new("deg(Δ·Δ)", &dd), Entry::new("χ(X)", chi)],
        )
    })
}

fn franchetta(n: u32, power: u32) -> Job {
    let inputs = vec![Entry::new("n", n), Entry::new("power", power)];
    Job::new("mck.franchetta", inputs, move || {
        let mut witness = Vec::new();
        let mut bad = Vec::new();
        for codim in 0..=n * power {
            match franchetta_rank_check(codim, power, n) {
                Ok(r) => {
                    if !r.holds() {
                        bad.push(codim);
                    }
                    witness.push(Entry::new(
                        format!("codim {codim}"),
                        format!(
                            "span {}, rank {}, gram rank {}, relations {}",
                            r.spanning.len(),
                            r.rank,
                            r.gram_rank,
                            r.relations.len()
                        ),
                    ));
                }
                Err(e) => return Outcome::failed(e),
            }
        }
        Outcome::new(
            Verdict::from_bool(bad.is_empty(), || {
                format!("unexplained kernel in codim {bad:?}")
            }),
            witness,
        )
    })
}

fn gamma3_job(surface: bool) -> Job {
    let kind = if surface { "surface" } else { "curve" };
    Job::new("mck.gamma3", vec![Entry::new("variety", kind)], move || {
        let ctx = if surface {
            Gamma3Context::surface()
        } else {
            Gamma3Context::curve()
        };
        let ids = match gamma3_consequences(&ctx) {
            Ok(ids) => ids,
            Err(e) => return Outcome::failed(e),
        };
        let mut witness: Vec<Entry> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| Entry::new(format!("{} {}", i + 1, id.name), id.statement(&ctx)))
            .collect();
        let checks: Vec<(String, bool)> = if surface {
            let model = CohModel::cubic(2).expect("cubic surface");
            let v = validate_in_model(&ctx, &model, &Assignment::cubic_surface(&model));
            vec![(
                "cubic surface".into(),
                v.map(|v| v.holds()).unwrap_or(false),
            )]
        } else {
            (0..=3u32)
                .map(|g| {
                    let model = CohModel::curve(g as usize).expect("curve");
                    let v = validate_in_model(&ctx, &model, &Assignment::curve(&model, g));
                    (format!("genus {g}"), v.map(|v| v.holds()).unwrap_or(false))
                })
                .collect()
        };
        let bad: Vec<&str> = checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(m, _)| m.as_str())
            .collect();
        for (model, ok) in &checks {
            witness.push(Entry::new(
                format!("model {model}"),
                if *ok { "validated" } else { "rejected" },
            ));
        }
        Outcome::new(
            Verdict::from_bool(bad.is_empty(), || format!("rejected by {}", bad.join(", "))),
            witness,
        )
    })
}

// Hodge numbers.

fn diamond_witness(d: &HodgeDiamond) -> Vec<Entry> {
    let mut w: Vec<Entry> = (0..=2 * d.dim())
        .map(|k| {
            let row: Vec<String> = d.row(k).iter().map(u64::to_string).collect();
            Entry::new(format!("H^{k}"), row.join(" "))
        })
        .collect();
    w.push(Entry::new("χ", d.euler_characteristic()));
    w
}

pub fn hodge_cubic(n: u32) -> Job {
    Job::new(
        "hodge.cubic",
        n_input(n),
        move || match hypersurface_diamond(3, n) {
            Ok(d) => {
                let mut w = diamond_witness(&d);
                w.push(Entry::new("source", "Jacobian ring formula"));
                Outcome::new(
                    Verdict::from_bool(d.is_symmetric(), || "diamond is not symmetric".into()),
                    w,
                )
            }
            Err(e) => Outcome::failed(e),
        },
    )
}

pub fn hodge_kuechle_c7() -> Job {
    Job::new("hodge.kuechle-c7", vec![], || {
        let d = kuechle_c7_diamond();
        let mut w = diamond_witness(&d);
        w.push(Entry::new("h^{1,1}", d.get(1, 1)));
        w.push(Entry::new("h^{2,2}", d.get(2, 2)));
        w.push(Entry::new(
            "source",
            "cubic fourfold plus exceptional divisor over P²",
        ));
        Outcome::new(
            Verdict::from_bool(d.is_symmetric(), || "diamond is not symmetric".into()),
            w,
        )
    })
}

pub fn hodge_fano_of_lines(n: u32) -> Job {
    Job::new("hodge.fano-of-lines", n_input(n), move || {
        let formula = match gs_fano_poincare(n) {
            Ok(p) => p,
            Err(e) => return Outcome::failed(e),
        };
        let gsv = match verify_gsv_identity(n) {
            Ok(r) => r,
            Err(e) => return Outcome::failed(e),
        };
        let ok = gsv.solved == formula;
        Outcome::new(
            Verdict::from_bool(ok, || {
                "GSV-solved Betti numbers differ from the decomposition".into()
            }),
            vec![
                Entry::new("b (formula)", &formula),
                Entry::new("b (GSV-solved)", &gsv.solved),
                Entry::new("χ", gsv.solved.euler_characteristic()),
            ],
        )
    })
}

fn gsv(n: u32) -> Job {
    Job::new("hodge.gsv", n_input(n), move || {
        match verify_gsv_identity(n) {
            Ok(r) => Outcome::new(
                Verdict::from_bool(r.lhs == r.rhs, || "sides differ".into()),
                vec![
                    Entry::new("lhs", tuple(&r.lhs)),
                    Entry::new("rhs", tuple(&r.rhs)),
                ],
            ),
            Err(e) => Outcome::failed(e),
        }
    })
}

fn diamonds() -> Job {
    Job::new("hodge.printed-diamonds", vec![], || {
        let row = hypersurface_diamond(3, 4).expect("cubic fourfold").row(4);
        let c7 = kuechle_c7_diamond();
        let ok = row[1..4] == [1, 21, 1] && (c7.get(1, 1), c7.get(2, 2)) == (2, 22);
        Outcome::new(
            Verdict::from_bool(ok, || "diamond values differ".into()),
            vec![
                Entry::new("cubic fourfold H^4", tuple(&row)),
                Entry::new("c7 h^{1,1}", c7.get(1, 1)),
                Entry::new("c7 h^{2,2}", c7.get(2, 2)),
            ],
        )
    })
}

/// The full acceptance suite with every n-range capped at `n_max`.
pub fn verify_all(n_max: u32) -> Vec<Job> {
    let upto = |lo: u32, hi: u32| lo..=hi.min(n_max);
    let mut jobs = vec![schubert_golden().prefixed("c1")];
    jobs.extend(upto(1, 12).map(|n| presentation(n).prefixed("c2")));
    jobs.extend(upto(3, 10).map(|n| fano_hilbert(n).prefixed("c3")));
    for n in upto(5, 12) {
        jobs.push(fano_socle(n).prefixed("c4"));
        jobs.push(fano_recurrence(n).prefixed("c4"));
        jobs.push(fano_recurrence_closed_form(n).prefixed("c4"));
        jobs.push(bd_pairing(n).prefixed("c4"));
    }
    jobs.push(diamonds().prefixed("c5"));
    jobs.extend(upto(3, 8).map(|n| gsv(n).prefixed("c6")));
    if n_max >= 4 {
        jobs.push(hodge_fano_of_lines(4).prefixed("c6"));
    }
    for n in upto(3, 8) {
        jobs.push(fano_dims_f(n).prefixed("c7"));
        jobs.push(fano_dims_fxf(n).prefixed("c7"));
    }
    for n in upto(3, 5) {
        jobs.push(mck_ck_axioms(n).prefixed("c8"));
        jobs.push(mck_self_duality(n).prefixed("c8"));
        jobs.push(mck_sweep_job(n).prefixed("c8"));
    }
    jobs.extend(upto(2, 6).map(|n| diagonal_gate(n).prefixed("c8")));
    for n in upto(3, 5) {
        jobs.push(franchetta(n, 1).prefixed("c9"));
        jobs.push(franchetta(n, 2).prefixed("c9"));
    }
    jobs.push(gamma3_job(false).prefixed("c10"));
    jobs.push(gamma3_job(true).prefixed("c10"));
    jobs
}
