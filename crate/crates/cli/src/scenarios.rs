//! The built-in scenario registry and the pipelines behind each entry.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use splinter_core::covers::{cocycle_lift, kill_class, witness_holds, CechSetup, KillOutcome};
use splinter_core::error::Error;
use splinter_core::flagpic::{
    anticanonical, anticanonical_closed_form, binomial, koszul_terms, mj_class, positivity, PicClass,
};
use splinter_core::frobmod::{graded_simplicity_report, DegreeVerdict, SimplicityReport, DEFAULT_ENUMERATION_BUDGET};
use splinter_core::gf::{Fe, Field};
use splinter_core::linalg::Matrix;
use splinter_core::poly::{ideal_piece_in_subalgebra, membership, subalgebra_piece_basis, GradedPoly, Grading, Monomial};
use splinter_core::projcoh::{
    cone_local_coh_table, hyp_coh, hyp_frobenius, p1_pullback, pn_coh, pn_frobenius, polynomial_local_coh_table, CohClass,
};
use splinter_core::trunc::{compose_null_witness, random_lemma_instance, ChainMap, CochainComplex, LemmaOutcome};

use crate::params::{ParamKind, ParamSpec, Params};
use crate::report::Report;
use crate::CliError;

pub struct ScenarioSpec {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: Vec<ParamSpec>,
    pub run: fn(&Params, &mut Report) -> Result<(), CliError>,
}

impl ScenarioSpec {
    pub fn schema(&self) -> Value {
        json!({
            "name": self.name,
            "summary": self.summary,
            "params": self.params.iter().map(ParamSpec::schema).collect::<Vec<_>>(),
        })
    }
}

fn int(key: &'static str, min: i64, max: i64, default: &'static str, help: &'static str) -> ParamSpec {
    ParamSpec {
        key,
        kind: ParamKind::Int { min, max },
        default,
        help,
    }
}

fn prime(default: &'static str) -> ParamSpec {
    ParamSpec {
        key: "p",
        kind: ParamKind::Prime,
        default,
        help: "characteristic",
    }
}

/// Registry in listing order.
pub fn registry() -> Vec<ScenarioSpec> {
    vec![
        ScenarioSpec {
            name: "hochster_char2",
            summary: "u^3+v^3 is not in (u^2,v^2)R for R = F_2[u^2,v^2,u^3+v^3]",
            params: vec![],
            run: hochster_char2,
        },
        ScenarioSpec {
            name: "hochster_family",
            summary: "u^a+v^a is not in (u^p,v^p)R for R = F_p[u^p,v^p,u^a+v^a], p < a < 2p",
            params: vec![prime("3"), int("a", 3, 64, "4", "exponent with p < a < 2p")],
            run: hochster_family,
        },
        ScenarioSpec {
            name: "quadric_cone",
            summary: "local cohomology of the cone over a conic: dimensions, Frobenius, graded simplicity",
            params: vec![
                prime("3"),
                ParamSpec {
                    key: "window",
                    kind: ParamKind::Window { min: -30, max: -1 },
                    default: "-9,-1",
                    help: "twist window lo,hi",
                },
            ],
            run: quadric_cone,
        },
        ScenarioSpec {
            name: "general_type_cone",
            summary: "Frobenius kills H^{n-1}(X, omega_X) for a hypersurface of general type",
            params: vec![
                prime("2"),
                int("n", 2, 3, "2", "ambient projective dimension"),
                int("d", 3, 6, "4", "hypersurface degree, d >= n + 2"),
            ],
            run: general_type_cone,
        },
        ScenarioSpec {
            name: "elliptic_cover",
            summary: "kill the H^1(O) class of a plane cubic by an additive-polynomial cover",
            params: vec![
                prime("2"),
                int("a1", 0, 250, "0", "Weierstrass coefficient"),
                int("a2", 0, 250, "0", "Weierstrass coefficient"),
                int("a3", 0, 250, "1", "Weierstrass coefficient"),
                int("a4", 0, 250, "0", "Weierstrass coefficient"),
                int("a6", 0, 250, "0", "Weierstrass coefficient"),
                int("e_max", 1, 6, "4", "largest annihilator height searched"),
                int("bound", 1, 12, "3", "Cech denominator bound"),
            ],
            run: elliptic_cover,
        },
        ScenarioSpec {
            name: "punctured_plane",
            summary: "the degree -2 class of the punctured plane has no additive annihilator",
            params: vec![prime("2"), int("e_max", 1, 6, "4", "largest annihilator height searched")],
            run: punctured_plane,
        },
        ScenarioSpec {
            name: "p1_pullback_audit",
            summary: "pullbacks on H^1(P^1, O(-2)) along finite covers and Frobenius",
            params: vec![
                ParamSpec {
                    key: "m_list",
                    kind: ParamKind::IntList { min: 1, max: 16 },
                    default: "2,3,4,5",
                    help: "cover degrees",
                },
                prime("2"),
                ParamSpec {
                    key: "frobenius_primes",
                    kind: ParamKind::IntList { min: 2, max: 31 },
                    default: "2,3",
                    help: "characteristics for the Frobenius pullback",
                },
            ],
            run: p1_pullback_audit,
        },
        ScenarioSpec {
            name: "truncation_random",
            summary: "seeded random composites of maps vanishing on one cohomology degree are null-homotopic",
            params: vec![
                int("seed", 0, i64::from(u32::MAX), "7", "random seed"),
                int("trials", 1, 1000, "50", "number of random instances"),
                int("d", 2, 4, "2", "number of composed maps"),
                prime("2"),
                int("max_dim", 1, 4, "3", "largest term dimension"),
            ],
            run: truncation_random,
        },
        ScenarioSpec {
            name: "flag_audit",
            summary: "anticanonical and relative classes on complete flag varieties",
            params: vec![int("n_max", 2, 8, "6", "largest flag size")],
            run: flag_audit,
        },
        ScenarioSpec {
            name: "koszul_audit",
            summary: "twisted Koszul terms for a point in the space of hyperplanes",
            params: vec![int("d_max", 2, 8, "8", "largest vector-space dimension")],
            run: koszul_audit,
        },
    ]
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_)
            | Error::NotPrime(_)
            | Error::FieldTooLarge(_)
            | Error::NonNormal(_)
            | Error::NotMonicInVariable(_)
            | Error::UnsupportedDimension(_)
            | Error::NotHomogeneous => CliError::Validation(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn fe_json(v: &[Fe]) -> Value {
    json!(v.iter().map(|x| x.value()).collect::<Vec<_>>())
}

fn matrix_json(m: &Matrix) -> Value {
    json!({"rows": m.rows(), "cols": m.cols(), "entries": m.to_int_rows()})
}

fn field(p: i64) -> Result<Field, CliError> {
    Ok(Field::prime(p as u32)?)
}

fn poly(f: &Field, vars: &[&str], src: &str) -> Result<GradedPoly, CliError> {
    Ok(GradedPoly::parse(f, &Grading::standard(vars.len()), vars, src)?)
}

fn monomial_json(m: &Monomial) -> Value {
    json!(m)
}

fn verdict_json(t: i64, v: &DegreeVerdict) -> Value {
    match v {
        DegreeVerdict::Certified => json!({"t": t, "verdict": "certified"}),
        DegreeVerdict::NotSimple { witness, closure_dims } => {
            json!({"t": t, "verdict": "not-simple", "witness": fe_json(witness), "closure_dims": closure_dims})
        }
        DegreeVerdict::Inconclusive { reason } => json!({"t": t, "verdict": "inconclusive", "reason": reason}),
    }
}

fn simplicity_json(r: &SimplicityReport) -> Value {
    json!({
        "window": [r.window.0, r.window.1],
        "table_window": [r.table_window.0, r.table_window.1],
        "dims": r.dims,
        "verdicts": r.verdicts.iter().map(|(t, v)| verdict_json(*t, v)).collect::<Vec<_>>(),
    })
}

fn hochster_instance(p: i64, a: i64, report: &mut Report) -> Result<bool, CliError> {
    let f = field(p)?;
    let vars = ["u", "v"];
    let gens = [
        poly(&f, &vars, &format!("u^{p}"))?,
        poly(&f, &vars, &format!("v^{p}"))?,
        poly(&f, &vars, &format!("u^{a}+v^{a}"))?,
    ];
    let ideal = [gens[0].clone(), gens[1].clone()];
    let algebra = subalgebra_piece_basis(&gens, a)?;
    let piece = ideal_piece_in_subalgebra(&ideal, &gens, a)?;
    let m = membership(&gens[2], &piece)?;
    let fmt = |b: Vec<GradedPoly>| b.iter().map(|g| g.format(&vars)).collect::<Vec<_>>();
    report.artifact("subalgebra_piece", fmt(algebra.basis()));
    report.artifact("ideal_piece", fmt(piece.basis()));
    report.artifact("degree", a);
    report.artifact("element", gens[2].format(&vars));
    report.verdict("membership", m.member);
    Ok(m.member)
}

fn hochster_char2(_: &Params, report: &mut Report) -> Result<(), CliError> {
    let member = hochster_instance(2, 3, report)?;
    // x = u^2, y = v^2, z = u^3 + v^3 satisfy x^3 + y^3 + z^2 = 0.
    let f = field(2)?;
    let g = |s: &str| poly(&f, &["u", "v"], s);
    let rel = g("u^2")?.pow(3).add(&g("v^2")?.pow(3)).add(&g("u^3+v^3")?.pow(2));
    report.verdict("presentation_relation_holds", rel.is_zero());
    report.expect("membership", false);
    report.claim("which is false", !member, "u^3+v^3 lies outside (u^2,v^2)R in degree 3");
    Ok(())
}

fn hochster_family(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let (p, a) = (params.int("p"), params.int("a"));
    if !(p < a && a < 2 * p) {
        return Err(CliError::Validation(format!("need p < a < 2p, got p = {p}, a = {a}")));
    }
    let member = hochster_instance(p, a, report)?;
    report.expect("membership", false);
    report.claim("for some p < a < 2p", !member, "u^a+v^a lies outside (u^p,v^p)R");
    Ok(())
}

fn quadric_cone(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let p = params.int("p");
    let (lo, hi) = params.window("window");
    let f = field(p)?;
    let h = poly(&f, &["x", "y", "z"], "x*y - z^2")?;
    report.artifact("hypersurface", h.format(&["x", "y", "z"]));
    let mut dims = Vec::new();
    let mut frob = Vec::new();
    let mut all_injective = true;
    for t in lo..=hi {
        let dim = hyp_coh(2, &h, 1, t)?.dim();
        dims.push(json!([t, dim]));
        let m = hyp_frobenius(2, &h, 1, t, 1)?;
        let injective = m.rank() == dim;
        all_injective &= injective;
        frob.push(json!({"t": t, "target": p * t, "injective": injective, "matrix": matrix_json(&m)}));
    }
    let conic_dims = (lo..=hi).all(|t| hyp_coh(2, &h, 1, t).map(|g| g.dim() as i64 == -2 * t - 1).unwrap_or(false));
    report.verdict("dims_by_twist", dims);
    report.verdict("dims_match_projective_line", conic_dims);
    report.verdict("frobenius_injective_all", all_injective);
    report.artifact("frobenius", frob);
    let table = cone_local_coh_table(&h, (lo * p, hi))?;
    let r = graded_simplicity_report(&table, (lo, hi), DEFAULT_ENUMERATION_BUDGET)?;
    report.verdict("graded_simplicity_certified", r.all_certified());
    report.artifact("graded_simplicity", simplicity_json(&r));
    report.claim(
        "multiplying the weights by p",
        all_injective,
        "Frobenius sends each twist t to p*t injectively",
    );
    Ok(())
}

fn general_type_surface(f: &Field, n: usize, d: i64) -> Result<GradedPoly, CliError> {
    let p = f.p() as i64;
    let src = match (n, d % p == 0) {
        (2, false) => format!("x^{d}+y^{d}+z^{d}"),
        (3, false) => format!("x^{d}+y^{d}+z^{d}+w^{d}"),
        (2, true) => format!("x^{e}*y+y^{e}*z+z^{e}*x", e = d - 1),
        (_, true) => format!("x^{e}*y+y^{e}*z+z^{e}*w+w^{e}*x", e = d - 1),
        _ => unreachable!(),
    };
    let vars: &[&str] = if n == 2 { &["x", "y", "z"] } else { &["x", "y", "z", "w"] };
    poly(f, vars, &src)
}

fn general_type_cone(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let (p, n, d) = (params.int("p"), params.int("n") as usize, params.int("d"));
    if d < n as i64 + 2 {
        return Err(CliError::Validation(format!("need d >= n + 2 for general type, got n = {n}, d = {d}")));
    }
    let f = field(p)?;
    let h = general_type_surface(&f, n, d)?;
    let vars: &[&str] = if n == 2 { &["x", "y", "z"] } else { &["x", "y", "z", "w"] };
    report.artifact("hypersurface", h.format(vars));
    let t = d - n as i64 - 1;
    let omega = hyp_coh(n, &h, n - 1, t)?;
    let target = hyp_coh(n, &h, n - 1, p * t)?;
    let m = hyp_frobenius(n, &h, n - 1, t, 1)?;
    report.verdict("omega_twist", t);
    report.verdict("omega_top_dim", omega.dim());
    report.verdict("frobenius_target_dim", target.dim());
    report.verdict("frobenius_zero", m.is_zero());
    report.artifact("frobenius", matrix_json(&m));
    let table = cone_local_coh_table(&h, (t - 1, t))?;
    let r = graded_simplicity_report(&table, (t - 1, t), DEFAULT_ENUMERATION_BUDGET)?;
    let witness = r.not_simple().find(|&(s, _)| s == t).map(|(_, w)| fe_json(w));
    report.verdict("not_simple_at_omega_twist", witness.is_some());
    report.artifact("graded_simplicity", simplicity_json(&r));
    report.claim(
        "has a non-trivial kernel",
        omega.dim() >= 1 && m.is_zero(),
        "Frobenius on the omega twist is zero on a nonzero group",
    );
    Ok(())
}

fn elliptic_curve(f: &Field, a: [i64; 5]) -> GradedPoly {
    let g = Grading::standard(3);
    let c = |n: i64| f.from_int(n);
    let neg = |n: i64| f.from_int(-n);
    let [a1, a2, a3, a4, a6] = a;
    GradedPoly::from_terms(
        f,
        &g,
        [
            (vec![3, 0, 0], c(1)),
            (vec![2, 0, 1], c(a2)),
            (vec![1, 0, 2], c(a4)),
            (vec![0, 0, 3], c(a6)),
            (vec![0, 2, 1], neg(1)),
            (vec![1, 1, 1], neg(a1)),
            (vec![0, 1, 2], neg(a3)),
        ],
    )
}

fn elliptic_cover(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let f = field(params.int("p"))?;
    let coeffs = ["a1", "a2", "a3", "a4", "a6"].map(|k| params.int(k));
    let h = elliptic_curve(&f, coeffs);
    report.artifact("hypersurface", h.format(&["x", "y", "z"]));
    let hasse = hyp_frobenius(2, &h, 1, 0, 1)?;
    let hasse_value = hasse.get(0, 0).value();
    report.verdict("hasse_invariant", hasse_value);
    report.verdict("supersingular", hasse_value == 0);
    let setup = CechSetup::plane_curve(&h, params.int("bound") as u32)?;
    let class = CohClass::new(hyp_coh(2, &h, 1, 0)?, vec![Fe::ONE])?;
    match kill_class(&setup, &class, params.int("e_max") as usize)? {
        KillOutcome::Killed { g, tower, witness } => {
            let vars = setup.var_names();
            report.verdict("annihilator", g.format(&f));
            report.verdict("annihilator_height", g.height());
            report.verdict("annihilator_is_pure_frobenius", g.lower_coeffs().iter().all(|c| *c == Fe::ZERO) && g.height() == 1);
            report.verdict("tower_steps", tower.steps().len());
            report.verdict("witness_found", true);
            report.verdict("witness_verified", witness_holds(&tower, &witness));
            report.artifact("cocycle", tower.cocycle().format(&vars));
            report.artifact("tower", tower.presentation());
            report.artifact(
                "witness",
                json!({
                    "b0": witness.b0.format(&setup.var_names_with_root("T0")),
                    "b1": witness.b1.format(&setup.var_names_with_root("T1")),
                }),
            );
            report.claim("a monic polynomial g ∈ A{X^p}", true, "annihilator found and its cover kills the class");
        }
        KillOutcome::NoAnnihilator => {
            report.verdict("annihilator", "none");
            report.verdict("witness_found", false);
        }
        KillOutcome::NotFoundWithinBound { g, tower } => {
            report.verdict("annihilator", g.format(&f));
            report.verdict("witness_found", false);
            report.artifact("tower", tower.presentation());
        }
    }
    Ok(())
}

fn punctured_plane(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let p = params.int("p");
    let e_max = params.int("e_max");
    let f = field(p)?;
    let far = -2 * p.pow(e_max as u32);
    if far < -256 {
        return Err(CliError::Validation(format!("2 p^e_max = {} exceeds 256", -far)));
    }
    let setup = CechSetup::plane(&f, 2);
    let class = CohClass::new(pn_coh(&f, 1, 1, -2)?, vec![Fe::ONE])?;
    report.artifact("cocycle", cocycle_lift(&setup, &class)?.format(&setup.var_names()));
    let table = polynomial_local_coh_table(&f, 2, (far, -2))?;
    let mut v = vec![Fe::ONE];
    let mut t = -2;
    let mut iterates = Vec::new();
    let mut all_nonzero = true;
    for _ in 0..e_max {
        let m = table.frob_map(t).ok_or_else(|| CliError::Internal(format!("no Frobenius map out of {t}")))?;
        v = m.mul_vec(&splinter_core::linalg::vec_frobenius(&f, &v, 1));
        t *= p;
        let basis = table.piece(t).monomial_basis().unwrap_or(&[]).to_vec();
        let terms: Vec<Value> = v
            .iter()
            .zip(&basis)
            .filter(|(c, _)| **c != Fe::ZERO)
            .map(|(c, m)| json!([c.value(), monomial_json(m)]))
            .collect();
        all_nonzero &= !terms.is_empty();
        iterates.push(json!({"t": t, "terms": terms}));
    }
    let outcome = kill_class(&setup.with_bound(2), &class, e_max as usize)?;
    let found = !matches!(outcome, KillOutcome::NoAnnihilator);
    report.verdict("annihilator_found", found);
    report.verdict("all_iterates_nonzero", all_nonzero);
    report.artifact("iterates", iterates);
    report.claim(
        "persist after passage to finite covers",
        !found,
        "no additive annihilator within the height bound",
    );
    Ok(())
}

fn binary_form(f: &Field, terms: &[(i32, i32)]) -> GradedPoly {
    GradedPoly::from_terms(f, &Grading::standard(2), terms.iter().map(|&(a, b)| (vec![a, b], Fe::ONE)))
}

fn p1_pullback_audit(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let f = field(params.int("p"))?;
    let vars = ["s", "t"];
    let mut rows = Vec::new();
    let mut all_injective = true;
    for &m in params.list("m_list") {
        let m = m as i32;
        let covers = [
            ("monomial", binary_form(&f, &[(m, 0)]), binary_form(&f, &[(0, m)])),
            ("mixed", binary_form(&f, &[(m, 0)]), binary_form(&f, &[(0, m), (m - 1, 1)])),
        ];
        for (kind, g0, g1) in covers {
            if m == 1 && kind == "mixed" {
                continue;
            }
            let mat = p1_pullback((&g0, &g1), -2)?;
            let injective = mat.rank() == 1;
            all_injective &= injective;
            rows.push(json!({
                "cover": kind,
                "m": m,
                "forms": [g0.format(&vars), g1.format(&vars)],
                "injective": injective,
                "matrix": matrix_json(&mat),
            }));
        }
    }
    let mut frob_rows = Vec::new();
    for &q in params.list("frobenius_primes") {
        let fq = field(q)?;
        let linear = p1_pullback((&binary_form(&fq, &[(q as i32, 0)]), &binary_form(&fq, &[(0, q as i32)])), -2)?;
        let frob = pn_frobenius(&fq, 1, 1, -2, 1)?;
        let injective = linear.rank() == 1 && frob.rank() == 1;
        all_injective &= injective;
        frob_rows.push(json!({
            "p": q,
            "injective": injective,
            "pullback_matrix": matrix_json(&linear),
            "frobenius_matrix": matrix_json(&frob),
        }));
    }
    report.verdict("all_injective", all_injective);
    report.verdict("zero_map_found", !all_injective);
    report.artifact("covers", rows);
    report.artifact("frobenius", frob_rows);
    report.claim(
        "inducing the 0 map on H^1(P^1, O(-2))",
        all_injective,
        "no tested cover induces the zero map",
    );
    Ok(())
}

fn complex_dims(k: &CochainComplex) -> Value {
    json!({"lo": k.lo(), "dims": (k.lo()..=k.hi()).map(|i| k.dim(i)).collect::<Vec<_>>()})
}

fn truncation_random(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let f = field(params.int("p"))?;
    let d = params.int("d") as usize;
    let max_dim = params.int("max_dim") as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(params.int("seed") as u64);
    let mut trials = Vec::new();
    let mut verified = 0usize;
    for _ in 0..params.int("trials") {
        let maps = random_lemma_instance(&mut rng, &f, d, max_dim);
        let outcome = compose_null_witness(&maps)?;
        let LemmaOutcome::Homotopy(h) = outcome else {
            return Err(CliError::Internal("random instance violated its own hypothesis".into()));
        };
        let mut composite = maps[0].clone();
        for g in &maps[1..] {
            composite = composite.then(g)?;
        }
        let ok = h.verifies(&composite);
        verified += ok as usize;
        trials.push(json!({
            "complexes": maps.iter().map(|m| complex_dims(m.source())).chain(std::iter::once(complex_dims(maps[d - 1].target()))).collect::<Vec<_>>(),
            "homotopy": {"lo": h.lo(), "components": h.components().iter().map(matrix_json).collect::<Vec<_>>()},
            "verified": ok,
        }));
    }
    let total = trials.len();
    // Identity maps on a complex with cohomology in degree d.
    let k = CochainComplex::zero_differentials(&f, d as i64, vec![1]);
    let ids: Vec<ChainMap> = (0..d).map(|_| ChainMap::identity(&k)).collect();
    let counter = match compose_null_witness(&ids)? {
        LemmaOutcome::HypothesisViolated { index, degree } => json!({"outcome": "hypothesis-violated", "index": index, "degree": degree}),
        LemmaOutcome::Homotopy(_) => json!({"outcome": "homotopy"}),
    };
    report.verdict("trials", total);
    report.verdict("verified", verified);
    report.verdict("all_verified", verified == total);
    report.verdict("identity_counter_instance", counter["outcome"].clone());
    report.artifact("identity_counter_instance", counter);
    report.artifact("trials", trials);
    report.claim(
        "the composite map f_d ∘ ⋯ ∘ f_2 ∘ f_1",
        verified == total,
        "every sampled composite is null-homotopic",
    );
    Ok(())
}

fn flag_audit(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let n_max = params.int("n_max") as usize;
    let mut anti = Vec::new();
    let mut all_ample = true;
    let mut closed_form = true;
    let mut table = Vec::new();
    let mut flagged = Vec::new();
    for n in 2..=n_max {
        let k = anticanonical(n)?;
        let r = positivity(&k);
        let same = k == anticanonical_closed_form(n)?;
        all_ample &= r.verdict == splinter_core::flagpic::Positivity::Ample;
        closed_form &= same;
        anti.push(json!({"n": n, "class": k.exps(), "degrees": r.degrees, "verdict": r.verdict.as_str(), "closed_form": same}));
        for j in 1..=n as i64 {
            let m = mj_class(n, j)?;
            let r = positivity(&m);
            let discrepancy = !r.verdict.is_nef();
            if discrepancy {
                flagged.push(json!([n, j]));
            }
            table.push(json!({
                "n": n,
                "j": j,
                "class": m.exps(),
                "degrees": r.degrees,
                "verdict": r.verdict.as_str(),
                "discrepancy": discrepancy,
            }));
        }
    }
    // Smallest a > b with L_a ⊗ L_b^{-1} not ample.
    let mut counterexample = Value::Null;
    'search: for n in 2..=n_max {
        for a in 2..=n {
            for b in 1..a {
                let c = PicClass::basis(n, a).tensor(&PicClass::basis(n, b).inverse());
                let r = positivity(&c);
                if r.verdict != splinter_core::flagpic::Positivity::Ample {
                    counterexample = json!({"n": n, "a": a, "b": b, "degrees": r.degrees, "verdict": r.verdict.as_str()});
                    break 'search;
                }
            }
        }
    }
    report.verdict("anticanonical_ample_all", all_ample);
    report.verdict("anticanonical_matches_closed_form", closed_form);
    report.verdict("relative_discrepancies", flagged.clone());
    report.artifact("anticanonical", anti);
    report.artifact("relative_classes", table);
    report.artifact("difference_class_counterexample", counterexample.clone());
    report.claim(
        "ample when a > b",
        counterexample.is_null(),
        "checked against the Schubert-curve degrees",
    );
    report.claim(
        "semiample and big for j > 0",
        flagged.is_empty(),
        "classes with a negative Schubert-curve degree are flagged",
    );
    Ok(())
}

fn koszul_audit(params: &Params, report: &mut Report) -> Result<(), CliError> {
    let d_max = params.int("d_max") as usize;
    let mut rows = Vec::new();
    let mut match_all = true;
    let mut max_twist_degree = Vec::new();
    for d in 2..=d_max {
        let terms = koszul_terms(d)?;
        let mut out = Vec::new();
        for (k, t) in terms.iter().enumerate() {
            let ok = t.multiplicity == binomial(d as u64 - 1, k as u64);
            match_all &= ok;
            let inv = positivity(&t.class.inverse());
            out.push(json!({
                "twist": t.twist,
                "multiplicity": t.multiplicity,
                "binomial_match": ok,
                "class": t.class.exps(),
                "inverse_verdict": inv.verdict.as_str(),
            }));
        }
        let deepest = terms.iter().map(|t| -t.twist).max().unwrap_or(0);
        max_twist_degree.push(json!([d, deepest]));
        rows.push(json!({"d": d, "terms": out}));
    }
    let within = max_twist_degree.iter().all(|v| v[1].as_i64() <= v[0].as_i64().map(|d| d - 2));
    report.verdict("multiplicities_match_binomial", match_all);
    report.verdict("max_twist_degree", max_twist_degree);
    report.artifact("terms", rows);
    report.claim(
        "degrees between 1 and d-2",
        within,
        "twist degrees of the listed terms run from 1 to d-1",
    );
    Ok(())
}
