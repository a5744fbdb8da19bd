//! Invariants checked on random inputs.

use proptest::prelude::*;

use splinter_core::covers::{kill_class, witness_holds, CechSetup, KillOutcome};
use splinter_core::error::Error;
use splinter_core::flagpic::{positivity, PicClass, Positivity};
use splinter_core::frobmod::{brute_force_f_simple, min_p_poly, SemilinearOp};
use splinter_core::gf::{Fe, Field};
use splinter_core::linalg::{vec_is_zero, Matrix};
use splinter_core::poly::{
    combination, ideal_piece_in_subalgebra, membership, normal_form_hypersurface, GradedPoly, Grading,
};
use splinter_core::projcoh::{hyp_coh, p1_pullback, pn_coh, CohClass};
use splinter_core::trunc::{compose_null_witness, random_lemma_instance, LemmaOutcome};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(5).unwrap(),
        Field::extension(2, &[1, 1, 1]).unwrap(),
        Field::extension(3, &[1, 0, 1]).unwrap(),
        Field::extension(2, &[1, 1, 0, 1]).unwrap(),
    ]
}

fn matrix(field: &Field, rows: usize, cols: usize, raw: &[u32]) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, Fe(raw[i * cols + j] % field.order()));
        }
    }
    m
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..5, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = &fields()[which];
        let (a, b, c) = (Fe(a % f.order()), Fe(b % f.order()), Fe(c % f.order()));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(a, f.degree()), a);
    }

    #[test]
    fn projective_space_dimensions(n in 1usize..=4, i in 0usize..=4, t in -10i64..=10) {
        prop_assume!(i <= n);
        let f = Field::prime(2).unwrap();
        let dim = pn_coh(&f, n, i, t).unwrap().dim() as i64;
        let n_ = n as i64;
        let expected = if i == 0 { binom(t + n_, n_) } else if i == n { binom(-t - 1, n_) } else { 0 };
        prop_assert_eq!(dim, expected);
        prop_assert_eq!(dim, pn_coh(&f, n, n - i, -t - n_ - 1).unwrap().dim() as i64);
    }

    #[test]
    fn hypersurface_euler_characteristic(which in 0usize..4, t in -8i64..=8) {
        let f = Field::prime(3).unwrap();
        let (n, src) = [
            (2usize, "x^3 + y^3 + z^3"),
            (2, "x^4 + y^4 + z^4"),
            (3, "x^2 + y^2 + z^2 + w^2"),
            (3, "x^3 + y^3 + z^3 + w^3"),
        ][which];
        let vars = ["x", "y", "z", "w"];
        let h = GradedPoly::parse(&f, &Grading::standard(n + 1), &vars[..=n], src).unwrap();
        let d = h.homogeneous_degree().unwrap();
        let chi_p = |s: i64| (0..=n).map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * pn_coh(&f, n, i, s).unwrap().dim() as i64
        }).sum::<i64>();
        let chi_x: i64 = (0..n).map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * hyp_coh(n, &h, i, t).unwrap().dim() as i64
        }).sum();
        prop_assert_eq!(chi_x, chi_p(t) - chi_p(t - d));
    }

    #[test]
    fn pullback_of_composite(c in proptest::collection::vec(0u32..3, 8), t in -3i64..=-1) {
        let f = Field::prime(3).unwrap();
        let g = Grading::standard(2);
        let lin = |a: u32, b: u32| GradedPoly::from_terms(&f, &g, [(vec![1, 0], Fe(a)), (vec![0, 1], Fe(b))]);
        let quad = |a: u32, b: u32, c: u32| GradedPoly::from_terms(
            &f, &g, [(vec![2, 0], Fe(a)), (vec![1, 1], Fe(b)), (vec![0, 2], Fe(c))]);
        let outer = (quad(c[0], c[1], c[2]), quad(c[3], 1, c[4]));
        let inner = (lin(c[5], 1), lin(1, c[6] + c[7] % 2));
        let (Ok(po), Ok(pi)) = (p1_pullback((&outer.0, &outer.1), t), p1_pullback((&inner.0, &inner.1), 2 * t)) else {
            return Err(TestCaseError::reject("degenerate cover"));
        };
        let comp = (
            outer.0.substitute(&[inner.0.clone(), inner.1.clone()]),
            outer.1.substitute(&[inner.0.clone(), inner.1.clone()]),
        );
        let pc = p1_pullback((&comp.0, &comp.1), t).unwrap();
        prop_assert_eq!(pc, pi.mul(&po));
    }

    #[test]
    fn annihilators_and_iterates(raw in proptest::collection::vec(0u32..4, 9), v in proptest::collection::vec(0u32..4, 3), a in 0usize..3, b in 0usize..3) {
        let f = Field::extension(2, &[1, 1, 1]).unwrap();
        let op = SemilinearOp::new(matrix(&f, 3, 3, &raw)).unwrap();
        let v: Vec<Fe> = v.into_iter().map(Fe).collect();
        let g = min_p_poly(&op, &v);
        prop_assert!(vec_is_zero(&op.apply_ppoly(&g, &v)));
        let direct = op.iterates(&v, a + b).pop().unwrap();
        let split = op.iterates(&op.iterates(&v, b).pop().unwrap(), a).pop().unwrap();
        prop_assert_eq!(direct, split);
    }

    #[test]
    fn simplicity_is_basis_independent(raw in proptest::collection::vec(0u32..2, 9), q in proptest::collection::vec(0u32..2, 9)) {
        let f = Field::prime(2).unwrap();
        let op = SemilinearOp::new(matrix(&f, 3, 3, &raw)).unwrap();
        let q = matrix(&f, 3, 3, &q);
        prop_assume!(q.inverse().is_some());
        let conj = op.conjugate(&q).unwrap();
        prop_assert_eq!(brute_force_f_simple(&op).unwrap(), brute_force_f_simple(&conj).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(coeffs in proptest::collection::vec(0u32..2, 10), mult in proptest::collection::vec(0u32..2, 3)) {
        let f = Field::prime(2).unwrap();
        let g = Grading::standard(3);
        let vars = ["x", "y", "z"];
        let h = GradedPoly::parse(&f, &g, &vars, "x^3 + y^2*z + y*z^2").unwrap();
        let monos = [
            [4, 0, 0], [5, 1, 0], [3, 1, 1], [6, 0, 0], [2, 2, 2],
            [0, 3, 1], [7, 0, 0], [4, 2, 0], [1, 1, 1], [3, 0, 3],
        ];
        let p = GradedPoly::from_terms(&f, &g, monos.iter().zip(&coeffs).map(|(m, &c)| (m.to_vec(), Fe(c))));
        let nf = normal_form_hypersurface(&p, &h, 0).unwrap();
        prop_assert!(nf.degree_in(0).map_or(true, |e| e < 3));
        prop_assert_eq!(normal_form_hypersurface(&nf, &h, 0).unwrap(), nf.clone());
        let k = GradedPoly::from_terms(&f, &g, [([1, 0, 0], mult[0]), ([0, 1, 0], mult[1]), ([0, 0, 1], mult[2])]
            .into_iter().map(|(m, c)| (m.to_vec(), Fe(c))));
        prop_assert_eq!(normal_form_hypersurface(&p.add(&h.mul(&k)), &h, 0).unwrap(), nf);
    }

    #[test]
    fn membership_ignores_generator_order(perm in 0usize..6, coords in proptest::collection::vec(0u32..2, 3)) {
        let f = Field::prime(2).unwrap();
        let g = Grading::standard(2);
        let u = |s: &str| GradedPoly::parse(&f, &g, &["u", "v"], s).unwrap();
        let mut gens = vec![u("u^2"), u("v^2"), u("u^3+v^3")];
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        gens = orders[perm].iter().map(|&i| gens[i].clone()).collect();
        let ideal = [u("v^2"), u("u^2")];
        let piece = ideal_piece_in_subalgebra(&ideal, &gens, 4).unwrap();
        prop_assert_eq!(piece.dim(), 3);
        prop_assert!(!membership(&u("u^3+v^3"), &ideal_piece_in_subalgebra(&ideal, &gens, 3).unwrap()).unwrap().member);
        let x = combination(&piece, &coords.into_iter().map(Fe).collect::<Vec<_>>());
        prop_assert!(membership(&x, &piece).unwrap().member);
    }

    #[test]
    fn random_lemma_instances_are_null_homotopic(seed in any::<u64>(), d in 2usize..=3) {
        let f = Field::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let maps = random_lemma_instance(&mut rng, &f, d, 3);
        let outcome = compose_null_witness(&maps).unwrap();
        let LemmaOutcome::Homotopy(h) = outcome else {
            return Err(TestCaseError::fail("hypothesis violated"));
        };
        let mut comp = maps[0].clone();
        for m in &maps[1..] {
            comp = comp.then(m).unwrap();
        }
        prop_assert!(h.verifies(&comp));
    }

    #[test]
    fn flag_degrees_are_additive(a in proptest::collection::vec(-5i64..5, 4), b in proptest::collection::vec(-5i64..5, 4)) {
        let (x, y) = (PicClass::new(a).unwrap(), PicClass::new(b).unwrap());
        let sum: Vec<i64> = x.curve_degrees().iter().zip(y.curve_degrees()).map(|(p, q)| p + q).collect();
        prop_assert_eq!(x.tensor(&y).curve_degrees(), sum);
        if positivity(&x).verdict == Positivity::Ample && positivity(&y).verdict == Positivity::Ample {
            prop_assert_eq!(positivity(&x.tensor(&y)).verdict, Positivity::Ample);
        }
        prop_assert!(x.tensor(&x.inverse()).equivalent(&PicClass::trivial(4)));
    }

    #[test]
    fn cubic_classes_are_killed(p_idx in 0usize..2, a in proptest::collection::vec(0i64..3, 5)) {
        let p = [2u32, 3][p_idx];
        let f = Field::prime(p).unwrap();
        let g = Grading::standard(3);
        let c = |n: i64| f.from_int(n);
        let h = GradedPoly::from_terms(&f, &g, [
            (vec![3, 0, 0], c(1)), (vec![2, 0, 1], c(a[1])), (vec![1, 0, 2], c(a[3])), (vec![0, 0, 3], c(a[4])),
            (vec![0, 2, 1], c(-1)), (vec![1, 1, 1], c(-a[0])), (vec![0, 1, 2], c(-a[2])),
        ]);
        let setup = CechSetup::plane_curve(&h, 3).unwrap();
        let class = CohClass::new(hyp_coh(2, &h, 1, 0).unwrap(), vec![Fe::ONE]).unwrap();
        match kill_class(&setup, &class, 3) {
            Err(Error::NonNormal(_)) => return Err(TestCaseError::reject("singular cubic")),
            Ok(KillOutcome::Killed { tower, witness, .. }) => prop_assert!(witness_holds(&tower, &witness)),
            other => return Err(TestCaseError::fail(format!("{other:?}"))),
        }
    }
}
