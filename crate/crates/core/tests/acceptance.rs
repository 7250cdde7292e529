//! Acceptance suite. Prints one line per criterion and exits nonzero on any unexpected failure.
//!
//! A criterion can carry a known discrepancy: a sub-claim that was checked and does
//! not hold. It is printed as FAIL with its reason, and does not change the exit code.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mck_core::exact::{frac, int};
use mck_core::fano::{
    dim_rfxf_bound, r_formula, r_vector, recurrence_check, solve_socle_relation, FanoContext,
    RecurrenceReport,
};
use mck_core::hodge::{
    hdg_count_f, hdg_count_fxf, hypersurface_diamond, kuechle_c7_diamond, verify_gsv_identity,
};
use mck_core::motive::franchetta::franchetta_rank_check;
use mck_core::motive::gamma3::{gamma3_consequences, validate_in_model, Assignment, Gamma3Context};
use mck_core::motive::projectors::{
    ck_projectors_cubic, diagonal_self_intersection, mck_sweep, verify_ck_axioms,
    verify_self_duality,
};
use mck_core::motive::CohModel;
use mck_core::schubert::{gc_monomial, verify_presentation};

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    known: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn known(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.known.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn(&mut Outcome),
}

fn schubert_golden(o: &mut Outcome) {
    for (a, b, want) in [(8, 0, 14), (6, 1, 5), (4, 2, 2)] {
        let got = gc_monomial(a, b, 6).degree();
        o.check(got == int(want), || {
            format!("deg g^{a}c^{b} on Gr(2,6) = {got}, want {want}")
        });
    }
    let f = FanoContext::new(4).unwrap().degree_f(4, 0);
    o.check(f == int(108), || format!("deg_F g^4 = {f}, want 108"));
    o.note("14, 5, 2, 108");
}

fn presentation(o: &mut Outcome) {
    for n in 1..=12 {
        match verify_presentation(n) {
            Ok(r) => o.check(r.holds(), || {
                format!("n = {n}: relations do not present the ring")
            }),
            Err(e) => o.check(false, || format!("n = {n}: {e}")),
        }
    }
    o.note("n = 1..12");
}

fn hilbert(o: &mut Outcome) {
    for n in 3..=10 {
        let h = FanoContext::new(n).unwrap().hilbert_function();
        let r = r_vector(n).unwrap();
        o.check(h.as_slice() == r.as_slice(), || {
            format!("n = {n}: {h} against {r:?}")
        });
    }
    let h4 = FanoContext::new(4).unwrap().hilbert_function();
    o.check(h4.as_slice() == [1, 1, 2, 1, 1], || {
        format!("n = 4 gives {h4}")
    });
    o.note(format!("n = 4: {h4}"));
}

fn socle(o: &mut Outcome) {
    let mut closed_form_bad = Vec::new();
    for n in 5..=12 {
        match solve_socle_relation(n) {
            Ok(rel) => {
                o.check(rel.residual().is_zero(), || format!("n = {n}: P·[F] ≠ 0"));
                o.check(rel.poly.coefficient(n - 1, 0) != int(0), || {
                    format!("n = {n}: zero leading coefficient")
                });
            }
            Err(e) => o.check(false, || format!("n = {n}: {e}")),
        }
        let rec = recurrence_check(n).unwrap();
        o.check(rec.argument_holds(), || {
            format!("n = {n}: non-divisibility argument fails")
        });
        let run = &rec.closed_form;
        o.check(RecurrenceReport::matches_stated_values(run, n), || {
            format!("n = {n}: p₁, p₂ from the closed form differ from the stated values")
        });
        o.check(run.p[0] == frac(n as i64 - 1, 2), || {
            format!("n = {n}: p₁ = {}", run.p[0])
        });
        o.check(run.p_nonintegral, || {
            format!("n = {n}: some p_j, j ≥ 2, is integral")
        });
        if !rec.closed_form_matches_expansion() {
            closed_form_bad.push(n);
        }
    }
    o.known(closed_form_bad.is_empty(), || {
        format!(
            "closed form (-1)^j C(n+1-j, j-1) differs from the coefficients of \
             (x²-y)R_{{n+1}} - xR_{{n+2}} for n in {closed_form_bad:?}; \
             those are (-1)^j C(n+1-j, j-2)"
        )
    });
    o.note("unique relation with g^{n-1} ≠ 0 for n = 5..12");
}

fn diamonds(o: &mut Outcome) {
    let d = hypersurface_diamond(3, 4).unwrap();
    let row = d.row(4);
    o.check(row[1..4] == [1, 21, 1], || {
        format!("cubic fourfold middle row {row:?}")
    });
    let c7 = kuechle_c7_diamond();
    let (h11, h22) = (c7.get(1, 1), c7.get(2, 2));
    o.check((h11, h22) == (2, 22), || {
        format!("c7: h11 = {h11}, h22 = {h22}")
    });
    o.note(format!("{row:?}; c7 h11 = {h11}, h22 = {h22}"));
}

fn gsv(o: &mut Outcome) {
    for n in 3..=8 {
        match verify_gsv_identity(n) {
            Ok(r) => o.check(r.lhs == r.rhs && r.solved == r.predicted, || {
                format!("n = {n}: solved {} against {}", r.solved, r.predicted)
            }),
            Err(e) => o.check(false, || format!("n = {n}: {e}")),
        }
    }
    let p = verify_gsv_identity(4).unwrap().solved;
    o.check(p.as_slice() == [1, 0, 23, 0, 276, 0, 23, 0, 1], || {
        format!("P(F) = {p}")
    });
    o.check(p.euler_characteristic() == 324, || {
        format!("χ(F) = {}", p.euler_characteristic())
    });
    o.note(format!("P(F) = {p}, χ = {}", p.euler_characteristic()));
}

fn census(o: &mut Outcome) {
    let mut checked = 0;
    for n in 3..=8 {
        for k in 0..=4 * n - 8 {
            let bound = dim_rfxf_bound(k, n).unwrap();
            match hdg_count_fxf(k, n) {
                Ok(c) => o.check(c == bound, || format!("(k, n) = ({k}, {n}): {c} ≠ {bound}")),
                Err(e) => o.check(false, || format!("(k, n) = ({k}, {n}): {e}")),
            }
            checked += 1;
        }
        for k in 0..=2 * n - 4 {
            let (c, r) = (hdg_count_f(k, n).unwrap(), r_formula(k, n).unwrap());
            o.check(c == r, || format!("F, (k, n) = ({k}, {n}): {c} ≠ {r}"));
        }
    }
    o.note(format!("{checked} (k, n) pairs on F×F"));
}

fn mck(o: &mut Outcome) {
    for n in 3..=5 {
        let ps = ck_projectors_cubic(n).unwrap();
        let ck = verify_ck_axioms(&ps).unwrap();
        o.check(ck.holds(), || format!("n = {n}: {:?}", ck.failures));
        o.check(verify_self_duality(&ps), || {
            format!("n = {n}: not self-dual")
        });
        let sweep = mck_sweep(&ps).unwrap();
        o.check(sweep.holds(), || {
            format!("n = {n}: failing triples {:?}", sweep.failures)
        });
        o.note(format!("n = {n}: {} triples", sweep.triples));
    }
    for n in 2..=6 {
        let model = CohModel::cubic(n).unwrap();
        let dd = diagonal_self_intersection(&model);
        let chi = model.euler_characteristic();
        o.check(dd == int(chi), || {
            format!("n = {n}: deg(Δ·Δ) = {dd}, χ = {chi}")
        });
    }
}

fn franchetta(o: &mut Outcome) {
    let mut count = 0;
    for n in 3..=5 {
        for power in 1..=2 {
            for codim in 0..=n * power {
                match franchetta_rank_check(codim, power, n) {
                    Ok(r) => o.check(r.holds(), || {
                        format!(
                            "n = {n}, X^{power}, codim {codim}: {} unexplained",
                            r.unexplained().len()
                        )
                    }),
                    Err(e) => o.check(false, || format!("n = {n}, X^{power}, codim {codim}: {e}")),
                }
                count += 1;
            }
        }
    }
    o.note(format!("{count} rank checks"));
}

fn gamma3(o: &mut Outcome) {
    let curve = Gamma3Context::curve();
    let surface = Gamma3Context::surface();
    let expected = [
        (
            &curve,
            vec!["c₁(T_C) = (2 - 2g)·z", "p₁*K·p₂*K = (2g - 2)·p₁*K·Δ"],
        ),
        (&surface, vec!["D·D′ = deg(D·D′)·z", "c₂(T_S) = χ_top·z"]),
    ];
    for (ctx, want) in expected {
        match gamma3_consequences(ctx) {
            Ok(ids) => {
                let got: Vec<String> = ids.iter().map(|i| i.statement(ctx)).collect();
                o.check(got == want, || format!("derived {got:?}"));
            }
            Err(e) => o.check(false, || e.to_string()),
        }
    }
    for genus in 0..=3 {
        let model = CohModel::curve(genus as usize).unwrap();
        let v = validate_in_model(&curve, &model, &Assignment::curve(&model, genus)).unwrap();
        o.check(v.holds(), || format!("genus {genus} model rejects {v:?}"));
    }
    let model = CohModel::cubic(2).unwrap();
    let v = validate_in_model(&surface, &model, &Assignment::cubic_surface(&model)).unwrap();
    o.check(v.holds(), || format!("cubic surface model rejects {v:?}"));
    o.note("FP with coefficient 2g - 2, c₁ and c₂ identities");
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "Schubert golden values",
        limit: Some(Duration::from_secs(1)),
        run: schubert_golden,
    },
    Criterion {
        id: 2,
        name: "presentation of CH*(Gr(2, n+2))",
        limit: Some(Duration::from_secs(5)),
        run: presentation,
    },
    Criterion {
        id: 3,
        name: "Hilbert function of R*(F)",
        limit: Some(Duration::from_secs(10)),
        run: hilbert,
    },
    Criterion {
        id: 4,
        name: "socle relation and recurrence",
        limit: Some(Duration::from_secs(10)),
        run: socle,
    },
    Criterion {
        id: 5,
        name: "Hodge diamonds",
        limit: None,
        run: diamonds,
    },
    Criterion {
        id: 6,
        name: "GSV identity",
        limit: Some(Duration::from_secs(5)),
        run: gsv,
    },
    Criterion {
        id: 7,
        name: "Hodge class census on F and F×F",
        limit: None,
        run: census,
    },
    Criterion {
        id: 8,
        name: "MCK certificate and deg(Δ·Δ) = χ",
        limit: Some(Duration::from_secs(60)),
        run: mck,
    },
    Criterion {
        id: 9,
        name: "Franchetta rank checks",
        limit: None,
        run: franchetta,
    },
    Criterion {
        id: 10,
        name: "Γ₃ derivations",
        limit: None,
        run: gamma3,
    },
];

fn main() -> ExitCode {
    let mut unexpected = 0;
    let mut known = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let mut o = Outcome::default();
        (c.run)(&mut o);
        let elapsed = start.elapsed();
        if let Some(limit) = c.limit {
            if elapsed > limit {
                o.failures
                    .push(format!("took {elapsed:?}, limit {limit:?}"));
            }
        }
        let verdict = if o.failures.is_empty() && o.known.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let limit = c
            .limit
            .map(|l| format!(" / {} ms", l.as_millis()))
            .unwrap_or_default();
        println!(
            "{verdict} {:>2} {} [{} ms{limit}; exact] {}",
            c.id,
            c.name,
            elapsed.as_millis(),
            o.notes.join("; ")
        );
        for f in &o.failures {
            println!("       unexpected: {f}");
        }
        for k in &o.known {
            println!("       known discrepancy: {k}");
        }
        unexpected += o.failures.len();
        known += o.known.len();
    }
    println!("{unexpected} unexpected failure(s), {known} known discrepancy(ies)");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
