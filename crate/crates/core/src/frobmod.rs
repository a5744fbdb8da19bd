//! `p`-semilinear operators on finite-dimensional spaces and graded
//! Frobenius modules: orbit spans, minimal additive annihilators, simplicity
//! by exhaustion, and windowed certificates for graded local cohomology.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field, PPolynomial};
use crate::linalg::{vec_add, vec_frobenius, vec_is_zero, vec_scale, Matrix, Subspace};
use crate::projcoh::LocalCohTable;

/// Default bound on the number of vectors enumerated by exhaustive checks.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

/// The operator `v -> M * v^[p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearOp {
    matrix: Matrix,
}

impl SemilinearOp {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::ShapeMismatch(format!(
                "operator matrix is {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(SemilinearOp { matrix })
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Fe]) -> Vec<Fe> {
        self.matrix.mul_vec(&vec_frobenius(self.field(), v, 1))
    }

    /// `v, F(v), ..., F^k(v)`.
    pub fn iterates(&self, v: &[Fe], k: usize) -> Vec<Vec<Fe>> {
        let mut out = vec![v.to_vec()];
        for _ in 0..k {
            let next = self.apply(out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }

    /// The same operator in the basis given by the columns of `q`:
    /// `Q^{-1} M Q^[p]`.
    pub fn conjugate(&self, q: &Matrix) -> Result<SemilinearOp> {
        let inv = q
            .inverse()
            .ok_or_else(|| Error::InvalidInput("change of basis is not invertible".into()))?;
        SemilinearOp::new(inv.mul(&self.matrix).mul(&q.frobenius_entries(1)))
    }

    /// `g(F)(v)`, with lower coefficients acting as scalars after the iterate.
    pub fn apply_ppoly(&self, g: &PPolynomial, v: &[Fe]) -> Vec<Fe> {
        let f = self.field().clone();
        let it = self.iterates(v, g.height());
        g.combine(&it, |a, w| vec_scale(&f, a, w), |x, y| vec_add(&f, &x, &y))
    }
}

/// Span of `v, F(v), F^2(v), ...`.
pub fn orbit_span(op: &SemilinearOp, v: &[Fe]) -> Subspace {
    let mut span = Subspace::zero(op.field(), op.dim());
    let mut w = v.to_vec();
    while span.insert(&w) {
        w = op.apply(&w);
    }
    span
}

/// Monic additive `g` of least height with `g(F)(v) = 0`. The zero vector
/// gets `X^p`.
pub fn min_p_poly(op: &SemilinearOp, v: &[Fe]) -> PPolynomial {
    let f = op.field();
    let mut span = Subspace::zero(f, op.dim());
    let mut iterates = vec![v.to_vec()];
    span.insert(v);
    loop {
        let next = op.apply(iterates.last().expect("nonempty"));
        if vec_is_zero(&next) || span.contains(&next) {
            let k = iterates.len();
            let basis = Matrix::from_cols(f, op.dim(), &iterates);
            let coeffs = if vec_is_zero(&next) {
                vec![Fe::ZERO; k]
            } else {
                basis.solve(&next).expect("dependent iterate")
            };
            let lower = coeffs.into_iter().map(|c| f.neg(c)).collect();
            return PPolynomial::new(k, lower).expect("height matches");
        }
        span.insert(&next);
        iterates.push(next);
    }
}

/// Representatives of the projective points of `F^dim`: vectors whose first
/// nonzero coordinate is one.
pub fn projective_points(field: &Field, dim: usize) -> impl Iterator<Item = Vec<Fe>> + '_ {
    (0..dim).flat_map(move |lead| {
        let free = dim - lead - 1;
        let q = field.order() as u64;
        (0..q.pow(free as u32)).map(move |mut code| {
            let mut v = vec![Fe::ZERO; dim];
            v[lead] = Fe::ONE;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = Fe((code % q) as u32);
                code /= q;
            }
            v
        })
    })
}

fn check_budget(field: &Field, dim: usize, budget: u64) -> Result<()> {
    let total = (field.order() as u64).checked_pow(dim as u32);
    match total {
        Some(n) if n <= budget => Ok(()),
        _ => Err(Error::BudgetExceeded { budget }),
    }
}

/// Whether every nonzero vector generates the whole space under `F`.
pub fn brute_force_f_simple(op: &SemilinearOp) -> Result<bool> {
    brute_force_f_simple_with_budget(op, DEFAULT_ENUMERATION_BUDGET)
}

pub fn brute_force_f_simple_with_budget(op: &SemilinearOp, budget: u64) -> Result<bool> {
    check_budget(op.field(), op.dim(), budget)?;
    Ok(projective_points(op.field(), op.dim()).all(|v| orbit_span(op, &v).dim() == op.dim()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeVerdict {
    /// Every nonzero vector of the piece generates all report-window pieces.
    Certified,
    /// `witness` generates a proper graded stable submodule whose images
    /// leaving the table window are all zero.
    NotSimple {
        witness: Vec<Fe>,
        closure_dims: Vec<usize>,
    },
    /// Some vector fails to generate but its closure leaks out of the window.
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub window: (i64, i64),
    pub table_window: (i64, i64),
    pub dims: Vec<usize>,
    pub verdicts: Vec<(i64, DegreeVerdict)>,
}

impl SimplicityReport {
    pub fn all_certified(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v == DegreeVerdict::Certified)
    }

    pub fn not_simple(&self) -> impl Iterator<Item = (i64, &Vec<Fe>)> {
        self.verdicts.iter().filter_map(|(t, v)| match v {
            DegreeVerdict::NotSimple { witness, .. } => Some((*t, witness)),
            _ => None,
        })
    }
}

/// Smallest family of subspaces of the table pieces containing the seeds and
/// stable under multiplication and Frobenius steps that stay in the window.
pub fn graded_closure(table: &LocalCohTable, seeds: &[(i64, Vec<Fe>)]) -> Vec<Subspace> {
    let (lo, hi) = table.window();
    let field = table.field();
    let mut spaces: Vec<Subspace> = (lo..=hi).map(|t| Subspace::zero(field, table.dim(t))).collect();
    let mut queue: Vec<(i64, Vec<Fe>)> = seeds.to_vec();
    while let Some((t, v)) = queue.pop() {
        if !spaces[(t - lo) as usize].insert(&v) {
            continue;
        }
        for j in 0..table.ngens() {
            if let Some(m) = table.mult_map(t, j) {
                queue.push((t + 1, m.mul_vec(&v)));
            }
        }
        if let Some(m) = table.frob_map(t) {
            queue.push((field.p() as i64 * t, m.mul_vec(&vec_frobenius(field, &v, 1))));
        }
    }
    spaces
}

fn covers_window(table: &LocalCohTable, spaces: &[Subspace], window: (i64, i64)) -> bool {
    let lo = table.window().0;
    (window.0..=window.1).all(|t| spaces[(t - lo) as usize].dim() == table.dim(t))
}

fn is_sealed(table: &LocalCohTable, spaces: &[Subspace]) -> Result<bool> {
    let lo = table.window().0;
    for (i, s) in spaces.iter().enumerate() {
        for b in s.basis() {
            for (_, img) in table.exit_images(lo + i as i64, b)? {
                if !vec_is_zero(&img) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Vectors of each piece that multiplication alone never carries to a
/// nonzero vector of degree `top`.
fn dead_below(table: &LocalCohTable, lo: i64, top: i64) -> Vec<Subspace> {
    let field = table.field();
    let mut out = vec![Subspace::zero(field, table.dim(top))];
    for t in (lo..top).rev() {
        let above = out.last().expect("nonempty");
        let dim = table.dim(t);
        let mut rows = Matrix::zeros(field, 0, dim);
        for j in 0..table.ngens() {
            let m = table.mult_map(t, j).expect("inside window");
            let cols: Vec<Vec<Fe>> = (0..dim).map(|c| above.quotient_coords(&m.col(c))).collect();
            let q = Matrix::from_cols(field, table.dim(t + 1) - above.dim(), &cols);
            rows = rows.vstack(&q);
        }
        out.push(Subspace::span(field, dim, &rows.kernel()));
    }
    out.reverse();
    out
}

/// Windowed graded simplicity check of the top local cohomology module.
///
/// A degree is certified when every nonzero homogeneous vector in it
/// generates every piece of `window`, using only multiplication and
/// Frobenius steps that stay inside the table's window.
pub fn graded_simplicity_report(table: &LocalCohTable, window: (i64, i64), budget: u64) -> Result<SimplicityReport> {
    let (tlo, thi) = table.window();
    let (lo, hi) = window;
    if lo > hi || lo < tlo || hi > thi {
        return Err(Error::WindowInsufficient {
            lo: tlo,
            hi: thi,
            needed: if lo < tlo { lo } else { hi },
        });
    }
    let field = table.field();
    let dims: Vec<usize> = (lo..=hi).map(|t| table.dim(t)).collect();
    let mut verdicts = Vec::new();
    if lo == hi {
        verdicts.push((
            lo,
            DegreeVerdict::Inconclusive {
                reason: "window of width 1".into(),
            },
        ));
        return Ok(SimplicityReport {
            window,
            table_window: (tlo, thi),
            dims,
            verdicts,
        });
    }
    let Some(top) = (lo..=hi).rev().find(|&t| table.dim(t) > 0) else {
        let verdicts = (lo..=hi).map(|t| (t, DegreeVerdict::Certified)).collect();
        return Ok(SimplicityReport {
            window,
            table_window: (tlo, thi),
            dims,
            verdicts,
        });
    };
    check_budget(field, table.dim(top), budget)?;
    let top_generates = projective_points(field, table.dim(top))
        .all(|w| covers_window(table, &graded_closure(table, &[(top, w)]), window));
    let dead = dead_below(table, lo, top);
    for t in lo..=hi {
        if table.dim(t) == 0 {
            verdicts.push((t, DegreeVerdict::Certified));
            continue;
        }
        // With a generating top piece only vectors that never reach it matter.
        let candidates: Vec<Vec<Fe>> = if top_generates {
            let k = &dead[(t - lo) as usize];
            if k.dim() == 0 {
                verdicts.push((t, DegreeVerdict::Certified));
                continue;
            }
            check_budget(field, k.dim(), budget)?;
            let basis = Matrix::from_cols(field, table.dim(t), k.basis());
            projective_points(field, k.dim()).map(|c| basis.mul_vec(&c)).collect()
        } else {
            check_budget(field, table.dim(t), budget)?;
            projective_points(field, table.dim(t)).collect()
        };
        let mut verdict = DegreeVerdict::Certified;
        for v in candidates {
            let spaces = graded_closure(table, &[(t, v.clone())]);
            if covers_window(table, &spaces, window) {
                continue;
            }
            if is_sealed(table, &spaces)? {
                verdict = DegreeVerdict::NotSimple {
                    witness: v,
                    closure_dims: (lo..=hi).map(|s| spaces[(s - tlo) as usize].dim()).collect(),
                };
                break;
            }
            verdict = DegreeVerdict::Inconclusive {
                reason: "closure leaves the table window".into(),
            };
        }
        verdicts.push((t, verdict));
    }
    Ok(SimplicityReport {
        window,
        table_window: (tlo, thi),
        dims,
        verdicts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedAnnihilator {
    Found(PPolynomial),
    NoneWithinBound,
}

/// Searches for a monic additive annihilator of a homogeneous class of
/// degree `t` among Frobenius iterates of height at most `e_max`.
///
/// Away from degree zero the iterates live in distinct degrees, so the only
/// candidates are `X^{p^k}` with `F^k(v) = 0`.
pub fn graded_min_p_poly(table: &LocalCohTable, t: i64, v: &[Fe], e_max: usize) -> Result<GradedAnnihilator> {
    if !table.contains(t) {
        let (lo, hi) = table.window();
        return Err(Error::WindowInsufficient { lo, hi, needed: t });
    }
    if v.len() != table.dim(t) {
        return Err(Error::DimensionMismatch {
            expected: table.dim(t),
            got: v.len(),
        });
    }
    if vec_is_zero(v) {
        return Ok(GradedAnnihilator::Found(PPolynomial::pure(1)));
    }
    if t == 0 {
        let op = SemilinearOp::new(table.frob_map(0).expect("degree zero is stable").clone())?;
        let g = min_p_poly(&op, v);
        return Ok(if g.height() <= e_max {
            GradedAnnihilator::Found(g)
        } else {
            GradedAnnihilator::NoneWithinBound
        });
    }
    let p = table.field().p() as i64;
    let mut degree = t;
    let mut w = v.to_vec();
    for k in 1..=e_max {
        let m = table.frob_map(degree).ok_or_else(|| {
            let (lo, hi) = table.window();
            Error::WindowInsufficient {
                lo,
                hi,
                needed: p * degree,
            }
        })?;
        w = m.mul_vec(&vec_frobenius(table.field(), &w, 1));
        degree *= p;
        if vec_is_zero(&w) {
            return Ok(GradedAnnihilator::Found(PPolynomial::pure(k)));
        }
    }
    Ok(GradedAnnihilator::NoneWithinBound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{GradedPoly, Grading};
    use crate::projcoh::{cone_local_coh_table, polynomial_local_coh_table};

    fn op(p: u32, rows: &[&[u32]]) -> SemilinearOp {
        let f = Field::prime(p).unwrap();
        let rows: Vec<Vec<Fe>> = rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect();
        SemilinearOp::new(Matrix::from_rows(&f, rows[0].len(), &rows)).unwrap()
    }

    fn v(xs: &[u32]) -> Vec<Fe> {
        xs.iter().map(|&x| Fe(x)).collect()
    }

    // Column convention: F(e_1) = e_2 means M has a 1 in row 2, column 1.
    fn shift() -> SemilinearOp {
        op(2, &[&[0, 0], &[1, 0]])
    }

    #[test]
    fn orbit_spans() {
        assert_eq!(orbit_span(&op(3, &[&[0, 0], &[0, 0]]), &v(&[1, 2])).dim(), 1);
        assert_eq!(orbit_span(&op(3, &[&[1, 0], &[0, 1]]), &v(&[1, 0])).dim(), 1);
        assert_eq!(orbit_span(&shift(), &v(&[1, 0])).dim(), 2);
    }

    #[test]
    fn minimal_annihilators() {
        assert_eq!(min_p_poly(&op(2, &[&[0]]), &v(&[1])), PPolynomial::pure(1));
        let id = op(5, &[&[1]]);
        let g = min_p_poly(&id, &v(&[1]));
        assert_eq!(g, PPolynomial::artin_schreier(id.field(), Fe(1)));
        assert_eq!(g.format(id.field()), "X^5 - X");
        assert_eq!(min_p_poly(&shift(), &v(&[1, 0])), PPolynomial::pure(2));
        assert!(vec_is_zero(&shift().apply_ppoly(&PPolynomial::pure(2), &v(&[1, 0]))));
    }

    #[test]
    fn simplicity_by_exhaustion() {
        assert!(brute_force_f_simple(&op(2, &[&[1]])).unwrap());
        assert!(!brute_force_f_simple(&op(2, &[&[1, 0], &[0, 1]])).unwrap());
        // Oracle: e_1 -> e_2 -> e_1 + e_2 -> e_1 (+ e_2 ...), every orbit spans.
        assert!(brute_force_f_simple(&op(2, &[&[0, 1], &[1, 1]])).unwrap());
        assert_eq!(
            brute_force_f_simple_with_budget(&op(2, &[&[1, 0], &[0, 1]]), 3),
            Err(Error::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn projective_point_count() {
        let f = Field::prime(3).unwrap();
        assert_eq!(projective_points(&f, 3).count(), 13);
    }

    fn xyz(p: u32, s: &str) -> GradedPoly {
        let f = Field::prime(p).unwrap();
        GradedPoly::parse(&f, &Grading::standard(3), &["x", "y", "z"], s).unwrap()
    }

    #[test]
    fn quadric_cone_small_window() {
        let table = cone_local_coh_table(&xyz(3, "x^2+y^2+z^2"), (-9, -1)).unwrap();
        let r = graded_simplicity_report(&table, (-3, -1), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert!(r.all_certified(), "{r:?}");
        let narrow = graded_simplicity_report(&table, (-2, -2), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert!(matches!(narrow.verdicts[0].1, DegreeVerdict::Inconclusive { .. }));
    }

    #[test]
    fn quartic_cone_is_not_simple() {
        let table = cone_local_coh_table(&xyz(2, "x^3*y+y^3*z+z^3*x"), (0, 1)).unwrap();
        assert_eq!(table.dims(), vec![3, 1]);
        let r = graded_simplicity_report(&table, (0, 1), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert!(r.not_simple().any(|(t, _)| t == 1), "{r:?}");
    }

    #[test]
    fn graded_annihilators() {
        let f = Field::prime(2).unwrap();
        let plane = polynomial_local_coh_table(&f, 2, (-32, -2)).unwrap();
        let top = plane.dim(-2);
        assert_eq!(top, 1);
        assert_eq!(
            graded_min_p_poly(&plane, -2, &[Fe::ONE], 4).unwrap(),
            GradedAnnihilator::NoneWithinBound
        );
        assert!(matches!(
            graded_min_p_poly(&plane, -2, &[Fe::ONE], 5),
            Err(Error::WindowInsufficient { needed: -64, .. })
        ));
        let ss = cone_local_coh_table(&xyz(2, "y^2*z+y*z^2+x^3"), (0, 0)).unwrap();
        assert_eq!(
            graded_min_p_poly(&ss, 0, &[Fe::ONE], 1).unwrap(),
            GradedAnnihilator::Found(PPolynomial::pure(1))
        );
        assert_eq!(
            graded_min_p_poly(&ss, 0, &[Fe::ZERO], 1).unwrap(),
            GradedAnnihilator::Found(PPolynomial::pure(1))
        );
    }
}
