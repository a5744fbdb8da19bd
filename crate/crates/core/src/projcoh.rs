//! Cohomology of line bundles on `P^n` and on hypersurfaces `X = V(h)`,
//! with Frobenius and pullback actions on explicit Čech representatives,
//! and graded local cohomology tables of affine cones.
//!
//! Variables of `P^n` are `x_0, …, x_n`. `H^n(P^n, O(t))` has the Laurent
//! monomials with every exponent at most `-1` and exponent sum `t` as basis;
//! a Laurent monomial with some exponent `>= 0` represents zero.
//!
//! A hypersurface group `H^i(X, O_X(t))` is stored through the restriction
//! sequence `0 -> O(t-d) -> O(t) -> O_X(t) -> 0` as the direct sum of the
//! cokernel of `h` on `H^i(P^n, -)` and the kernel of `h` on `H^{i+1}(P^n, -)`.
//! Frobenius raises a cokernel representative to the `q`-th power and sends a
//! kernel representative `c` to `h^{q-1} c^q`.
//!
//! Matrices of semilinear maps follow the convention `v -> M * v^[q]`, where
//! `v^[q]` raises every coordinate to the `q`-th power.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{GradedPoly, Grading, Monomial};

pub const MAX_AMBIENT_DIM: usize = 3;
pub const MAX_TWIST: i64 = 64;
pub const MAX_HYPERSURFACE_DEGREE: i64 = 6;

/// An indexed list of monomials.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &[i32]) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn poly(&self, field: &Field, grading: &Grading, v: &[Fe]) -> GradedPoly {
        GradedPoly::from_terms(field, grading, self.monomials.iter().cloned().zip(v.iter().copied()))
    }

    /// Coefficients of `f` on this basis; monomials outside it are dropped.
    fn truncate(&self, f: &GradedPoly) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.len()];
        for (m, &c) in f.terms() {
            if let Some(i) = self.position(m) {
                v[i] = c;
            }
        }
        v
    }
}

/// All vectors of `k` non-negative integers summing to `s`, in decreasing
/// lexicographic order.
fn compositions(s: i64, k: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    if s < 0 || k == 0 {
        if s == 0 && k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(k);
    fn rec(s: i64, k: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if k == 1 {
            cur.push(s as i32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=s).rev() {
            cur.push(a as i32);
            rec(s - a, k - 1, cur, out);
            cur.pop();
        }
    }
    rec(s, k, &mut cur, &mut out);
    out
}

fn pn_monomials(n: usize, i: usize, t: i64) -> Vec<Monomial> {
    if i == 0 && t >= 0 {
        compositions(t, n + 1)
    } else if i == n && t <= -(n as i64 + 1) {
        compositions(-t - (n as i64 + 1), n + 1)
            .into_iter()
            .map(|a| a.into_iter().map(|x| -1 - x).collect())
            .collect()
    } else {
        Vec::new()
    }
}

#[derive(Clone, Debug)]
enum PartKind {
    Full,
    Quotient { image: Subspace, positions: Vec<usize> },
    Sub { kernel: Subspace },
}

#[derive(Clone, Debug)]
struct Part {
    ambient: MonomialBasis,
    kind: PartKind,
    /// Kernel-side parts pick up `h^{q-1}` under Frobenius.
    kernel_side: bool,
}

impl Part {
    fn dim(&self) -> usize {
        match &self.kind {
            PartKind::Full => self.ambient.len(),
            PartKind::Quotient { positions, .. } => positions.len(),
            PartKind::Sub { kernel } => kernel.dim(),
        }
    }

    fn representative(&self, j: usize) -> Vec<Fe> {
        match &self.kind {
            PartKind::Full => unit(self.ambient.len(), j),
            PartKind::Quotient { positions, .. } => unit(self.ambient.len(), positions[j]),
            PartKind::Sub { kernel } => kernel.basis()[j].clone(),
        }
    }

    fn coords(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        match &self.kind {
            PartKind::Full => Ok(v.to_vec()),
            PartKind::Quotient { image, .. } => Ok(image.quotient_coords(v)),
            PartKind::Sub { kernel } => kernel
                .coords(v)
                .ok_or_else(|| Error::IdentityFailure("representative left the kernel of h".into())),
        }
    }
}

fn unit(n: usize, j: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    v[j] = Fe::ONE;
    v
}

/// A cohomology group with an explicit basis of representatives.
#[derive(Clone, Debug)]
pub struct CohGroup {
    field: Field,
    n: usize,
    hypersurface: Option<GradedPoly>,
    index: usize,
    twist: i64,
    parts: Vec<Part>,
}

impl CohGroup {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn hypersurface(&self) -> Option<&GradedPoly> {
        self.hypersurface.as_ref()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(Part::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Monomial basis of a group on `P^n`.
    pub fn monomial_basis(&self) -> Option<&[Monomial]> {
        match (&self.hypersurface, self.parts.as_slice()) {
            (None, [part]) => Some(part.ambient.monomials()),
            _ => None,
        }
    }

    /// Dimension of the part coming from `H^i(P^n, O(t)) / h * H^i(P^n, O(t-d))`.
    pub fn coker_dim(&self) -> usize {
        match self.hypersurface {
            Some(_) => self.parts[0].dim(),
            None => self.dim(),
        }
    }

    /// Dimension of the part coming from `ker(h)` on `H^{i+1}(P^n, O(t-d))`.
    pub fn ker_dim(&self) -> usize {
        match self.hypersurface {
            Some(_) => self.parts[1].dim(),
            None => 0,
        }
    }

    fn grading(&self) -> Grading {
        Grading::standard(self.n + 1)
    }

    fn split<'a>(&self, coords: &'a [Fe]) -> Vec<&'a [Fe]> {
        let mut out = Vec::new();
        let mut start = 0;
        for p in &self.parts {
            out.push(&coords[start..start + p.dim()]);
            start += p.dim();
        }
        out
    }

    fn check_len(&self, coords: &[Fe]) -> Result<()> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(())
    }

    /// Representatives of a class, one Laurent polynomial per part. For a
    /// hypersurface group the parts are `[cokernel side, kernel side]`.
    pub fn representatives(&self, coords: &[Fe]) -> Result<Vec<GradedPoly>> {
        self.check_len(coords)?;
        let f = &self.field;
        let g = self.grading();
        Ok(self
            .parts
            .iter()
            .zip(self.split(coords))
            .map(|(part, c)| {
                let mut v = vec![Fe::ZERO; part.ambient.len()];
                for (j, &cj) in c.iter().enumerate() {
                    if !cj.is_zero() {
                        let r = part.representative(j);
                        for (x, y) in v.iter_mut().zip(r) {
                            *x = f.add(*x, f.mul(cj, y));
                        }
                    }
                }
                part.ambient.poly(f, &g, &v)
            })
            .collect())
    }

    /// Inverse of [`CohGroup::representatives`]; terms outside the relevant
    /// monomial bases represent zero and are discarded.
    pub fn coords_of(&self, reps: &[GradedPoly]) -> Result<Vec<Fe>> {
        if reps.len() != self.parts.len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} representatives, got {}",
                self.parts.len(),
                reps.len()
            )));
        }
        let mut out = Vec::with_capacity(self.dim());
        for (part, r) in self.parts.iter().zip(reps) {
            out.extend(part.coords(&part.ambient.truncate(r))?);
        }
        Ok(out)
    }
}

/// A class in a [`CohGroup`].
#[derive(Clone, Debug)]
pub struct CohClass {
    pub group: CohGroup,
    pub coords: Vec<Fe>,
}

impl CohClass {
    pub fn new(group: CohGroup, coords: Vec<Fe>) -> Result<Self> {
        group.check_len(&coords)?;
        Ok(CohClass { group, coords })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// `H^i(P^n, O(t))` with its monomial basis.
pub fn pn_coh(field: &Field, n: usize, i: usize, t: i64) -> Result<CohGroup> {
    if n == 0 || i > n {
        return Err(Error::InvalidInput(format!("need n >= 1 and 0 <= i <= n, got n={n}, i={i}")));
    }
    Ok(CohGroup {
        field: field.clone(),
        n,
        hypersurface: None,
        index: i,
        twist: t,
        parts: vec![Part {
            ambient: MonomialBasis::new(pn_monomials(n, i, t)),
            kind: PartKind::Full,
            kernel_side: false,
        }],
    })
}

/// Matrix of multiplication by `g` from `H^i(P^n, O(s))` to `H^i(P^n, O(s + deg g))`.
fn multiplication_matrix(field: &Field, src: &MonomialBasis, tgt: &MonomialBasis, g: &GradedPoly) -> Matrix {
    let cols: Vec<Vec<Fe>> = src
        .monomials()
        .iter()
        .map(|m| tgt.truncate(&g.mul_monomial(m, Fe::ONE)))
        .collect();
    Matrix::from_cols(field, tgt.len(), &cols)
}

fn check_hypersurface(n: usize, h: &GradedPoly) -> Result<i64> {
    if n == 0 || n > MAX_AMBIENT_DIM {
        return Err(Error::UnsupportedDimension(format!("ambient P^{n}; supported 1..={MAX_AMBIENT_DIM}")));
    }
    if h.nvars() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: h.nvars(),
        });
    }
    if !h.is_polynomial() || h.grading().weights().iter().any(|&w| w != 1) {
        return Err(Error::InvalidInput("hypersurface must be a standard-graded polynomial".into()));
    }
    let d = h.homogeneous_degree()?;
    if d < 1 || d > MAX_HYPERSURFACE_DEGREE {
        return Err(Error::UnsupportedDimension(format!(
            "hypersurface degree {d}; supported 1..={MAX_HYPERSURFACE_DEGREE}"
        )));
    }
    Ok(d)
}

fn check_twist(t: i64) -> Result<()> {
    if t.abs() > MAX_TWIST {
        return Err(Error::UnsupportedDimension(format!("twist {t}; supported |t| <= {MAX_TWIST}")));
    }
    Ok(())
}

/// `H^i(X, O_X(t))` for `X = V(h) ⊂ P^n`, `0 <= i <= n-1`.
pub fn hyp_coh(n: usize, h: &GradedPoly, i: usize, t: i64) -> Result<CohGroup> {
    check_hypersurface(n, h)?;
    check_twist(t)?;
    if i + 1 > n {
        return Err(Error::InvalidInput(format!("index {i} exceeds dim X = {}", n - 1)));
    }
    Ok(hyp_group(n, h, i, t))
}

fn hyp_group(n: usize, h: &GradedPoly, i: usize, t: i64) -> CohGroup {
    let field = h.field().clone();
    let d = h.homogeneous_degree().expect("checked homogeneous");
    let coker_src = MonomialBasis::new(pn_monomials(n, i, t - d));
    let coker_amb = MonomialBasis::new(pn_monomials(n, i, t));
    let image_mat = multiplication_matrix(&field, &coker_src, &coker_amb, h);
    let image = Subspace::span(&field, coker_amb.len(), &image_mat.image());
    let positions = image.complement_positions();
    let ker_amb = MonomialBasis::new(pn_monomials(n, i + 1, t - d));
    let ker_tgt = MonomialBasis::new(pn_monomials(n, i + 1, t));
    let kernel_vecs = multiplication_matrix(&field, &ker_amb, &ker_tgt, h).kernel();
    let kernel = Subspace::span(&field, ker_amb.len(), &kernel_vecs);
    CohGroup {
        field,
        n,
        hypersurface: Some(h.clone()),
        index: i,
        twist: t,
        parts: vec![
            Part {
                ambient: coker_amb,
                kind: PartKind::Quotient { image, positions },
                kernel_side: false,
            },
            Part {
                ambient: ker_amb,
                kind: PartKind::Sub { kernel },
                kernel_side: true,
            },
        ],
    }
}

/// Matrix of the map induced on groups of the same shape by
/// `rep -> mult * rep^(p^k)`, where kernel-side parts use `kernel_mult`.
fn induced_map(src: &CohGroup, tgt: &CohGroup, k: u32, mult: &GradedPoly, kernel_mult: &GradedPoly) -> Result<Matrix> {
    let field = &src.field;
    let grading = src.grading();
    let mut cols = Vec::with_capacity(src.dim());
    let mut offset = 0;
    for (sp, tp) in src.parts.iter().zip(&tgt.parts) {
        let m = if sp.kernel_side { kernel_mult } else { mult };
        for j in 0..sp.dim() {
            let rep = sp.ambient.poly(field, &grading, &sp.representative(j));
            let image = rep.frobenius_power(k).mul(m);
            let mut col = vec![Fe::ZERO; tgt.dim()];
            let part = tp.coords(&tp.ambient.truncate(&image))?;
            col[offset..offset + part.len()].copy_from_slice(&part);
            cols.push(col);
        }
        offset += tp.dim();
    }
    Ok(Matrix::from_cols(field, tgt.dim(), &cols))
}

fn frobenius_between(src: &CohGroup, tgt: &CohGroup, e_pow: u32) -> Result<Matrix> {
    let field = &src.field;
    let grading = src.grading();
    let one = GradedPoly::one(field, &grading);
    let kernel_mult = match &src.hypersurface {
        Some(h) => h.pow((field.p() as u32).pow(e_pow) - 1),
        None => one.clone(),
    };
    if src.hypersurface.is_some() && src.parts.iter().all(|p| p.dim() > 0) {
        return Err(Error::UnsupportedDimension(
            "Frobenius on a group with both cokernel and kernel parts".into(),
        ));
    }
    induced_map(src, tgt, e_pow, &one, &kernel_mult)
}

/// Frobenius `H^i(X, O_X(t)) -> H^i(X, O_X(p^e t))` as a matrix `M` acting by
/// `v -> M * v^[p^e]`.
pub fn hyp_frobenius(n: usize, h: &GradedPoly, i: usize, t: i64, e_pow: u32) -> Result<Matrix> {
    let src = hyp_coh(n, h, i, t)?;
    let q = (h.field().p() as i64).checked_pow(e_pow).ok_or(Error::UnsupportedDimension("Frobenius power".into()))?;
    let tgt = hyp_coh(n, h, i, q * t)?;
    frobenius_between(&src, &tgt, e_pow)
}

/// Frobenius on `H^i(P^n, O(t))`: monomials are raised to the `p^e` power.
pub fn pn_frobenius(field: &Field, n: usize, i: usize, t: i64, e_pow: u32) -> Result<Matrix> {
    let q = (field.p() as i64).pow(e_pow);
    frobenius_between(&pn_coh(field, n, i, t)?, &pn_coh(field, n, i, q * t)?, e_pow)
}

fn sylvester_is_regular(g0: &GradedPoly, g1: &GradedPoly, m: usize) -> bool {
    // Coefficient of s^{m-j} t^j, j = 0..m.
    let coeffs = |g: &GradedPoly| -> Vec<Fe> { (0..=m).map(|j| g.coeff(&[(m - j) as i32, j as i32])).collect() };
    let (a, b) = (coeffs(g0), coeffs(g1));
    let size = 2 * m;
    let mut rows = Vec::new();
    for src in [&a, &b] {
        for shift in 0..m {
            let mut r = vec![Fe::ZERO; size];
            for (j, &c) in src.iter().enumerate() {
                r[shift + j] = c;
            }
            rows.push(r);
        }
    }
    Matrix::from_rows(g0.field(), size, &rows).rank() == size
}

/// Writes `target` as `a * u + b * w` with homogeneous `a`, `b` in two variables.
fn solve_ideal_combination(target: &GradedPoly, u: &GradedPoly, w: &GradedPoly) -> Option<(GradedPoly, GradedPoly)> {
    let field = target.field();
    let grading = target.grading();
    let dt = target.homogeneous_degree().ok()?;
    let (du, dw) = (u.homogeneous_degree().ok()?, w.homogeneous_degree().ok()?);
    let basis_t = MonomialBasis::new(pn_monomials(1, 0, dt));
    let basis_a = MonomialBasis::new(pn_monomials(1, 0, dt - du));
    let basis_b = MonomialBasis::new(pn_monomials(1, 0, dt - dw));
    let ma = multiplication_matrix(field, &basis_a, &basis_t, u);
    let mb = multiplication_matrix(field, &basis_b, &basis_t, w);
    let mut cols = Vec::new();
    for j in 0..ma.cols() {
        cols.push(ma.col(j));
    }
    for j in 0..mb.cols() {
        cols.push(mb.col(j));
    }
    let sol = Matrix::from_cols(field, basis_t.len(), &cols).solve(&basis_t.truncate(target))?;
    let (sa, sb) = sol.split_at(basis_a.len());
    Some((basis_a.poly(field, grading, sa), basis_b.poly(field, grading, sb)))
}

/// Pullback along `(s : t) -> (g0 : g1)` on `H^1(P^1, O(t))`, landing in
/// `H^1(P^1, O(m t))`. Classes are moved with the transformation law of
/// generalised fractions: if `(s^M, t^M)^T = A (g0^a, g1^b)^T` then
/// `[c / (g0^a g1^b)] = [c det A / (s^M t^M)]`.
pub fn p1_pullback(forms: (&GradedPoly, &GradedPoly), t: i64) -> Result<Matrix> {
    let (g0, g1) = forms;
    let field = g0.field().clone();
    for g in [g0, g1] {
        if g.nvars() != 2 || !g.is_polynomial() {
            return Err(Error::InvalidInput("forms must be binary polynomials".into()));
        }
    }
    let m = g0.homogeneous_degree()?;
    let m1 = g1.homogeneous_degree()?;
    if m != m1 {
        return Err(Error::DegreeMismatch { expected: m, got: m1 });
    }
    if m < 1 {
        return Err(Error::InvalidInput("forms must have positive degree".into()));
    }
    check_twist(t)?;
    check_twist(m * t)?;
    if !sylvester_is_regular(g0, g1, m as usize) {
        return Err(Error::DegenerateMap);
    }
    let src = pn_coh(&field, 1, 1, t)?;
    let tgt = pn_coh(&field, 1, 1, m * t)?;
    let grading = Grading::standard(2);
    let mut cols = Vec::new();
    for mono in src.monomial_basis().unwrap_or(&[]) {
        let (a, b) = (-mono[0] as u32, -mono[1] as u32);
        let u = g0.pow(a);
        let w = g1.pow(b);
        let big = m * (a + b) as i64 - 1;
        let s_pow = GradedPoly::monomial(&field, &grading, vec![big as i32, 0], Fe::ONE);
        let t_pow = GradedPoly::monomial(&field, &grading, vec![0, big as i32], Fe::ONE);
        let (a00, a01) = solve_ideal_combination(&s_pow, &u, &w).ok_or(Error::DegenerateMap)?;
        let (a10, a11) = solve_ideal_combination(&t_pow, &u, &w).ok_or(Error::DegenerateMap)?;
        let det = a00.mul(&a11).sub(&a01.mul(&a10));
        let frac = det.mul_monomial(&[-(big as i32), -(big as i32)], Fe::ONE);
        cols.push(tgt.coords_of(&[frac])?);
    }
    Ok(Matrix::from_cols(&field, tgt.dim(), &cols))
}

/// Whether `V(h)` is smooth: the ideal of `h` and its partial derivatives
/// must contain every monomial of degree `(n+1)(d-1)+1`.
pub fn is_smooth_hypersurface(h: &GradedPoly) -> Result<bool> {
    let n = h.nvars() - 1;
    let d = check_hypersurface(n, h)?;
    let field = h.field();
    let mut gens = vec![h.clone()];
    gens.extend((0..=n).map(|j| h.derivative(j)).filter(|g| !g.is_zero()));
    let top = (n as i64 + 1) * (d - 1) + 1;
    let target = MonomialBasis::new(pn_monomials(n, 0, top));
    let mut span = Subspace::zero(field, target.len());
    for g in &gens {
        let dg = g.homogeneous_degree()?;
        for m in pn_monomials(n, 0, top - dg) {
            span.insert(&target.truncate(&g.mul_monomial(&m, Fe::ONE)));
            if span.dim() == target.len() {
                return Ok(true);
            }
        }
    }
    Ok(span.dim() == target.len())
}

/// Coordinate ring of an affine cone.
#[derive(Clone, Debug)]
pub enum ConeRing {
    /// `k[x_0, …, x_{nvars-1}]`.
    Polynomial { field: Field, nvars: usize },
    /// `k[x_0, …, x_n] / (h)` for smooth `V(h) ⊂ P^n`.
    Hypersurface { h: GradedPoly },
}

impl ConeRing {
    pub fn field(&self) -> &Field {
        match self {
            ConeRing::Polynomial { field, .. } => field,
            ConeRing::Hypersurface { h } => h.field(),
        }
    }

    /// Number of coordinate generators, each of degree one.
    pub fn ngens(&self) -> usize {
        match self {
            ConeRing::Polynomial { nvars, .. } => *nvars,
            ConeRing::Hypersurface { h } => h.nvars(),
        }
    }

    /// Krull dimension.
    pub fn dim(&self) -> usize {
        match self {
            ConeRing::Polynomial { nvars, .. } => *nvars,
            ConeRing::Hypersurface { h } => h.nvars() - 1,
        }
    }

    /// Degree-`t` piece of the top local cohomology module.
    fn top_piece(&self, t: i64) -> CohGroup {
        match self {
            ConeRing::Polynomial { field, nvars } => {
                pn_coh(field, nvars - 1, nvars - 1, t).expect("validated shape")
            }
            ConeRing::Hypersurface { h } => {
                let n = h.nvars() - 1;
                hyp_group(n, h, n - 1, t)
            }
        }
    }

    fn local_coh_dim(&self, i: usize, t: i64) -> usize {
        match self {
            ConeRing::Polynomial { field, nvars } => {
                pn_coh(field, nvars - 1, i - 1, t).map(|g| g.dim()).unwrap_or(0)
            }
            ConeRing::Hypersurface { h } => hyp_group(h.nvars() - 1, h, i - 1, t).dim(),
        }
    }
}

/// Graded pieces of the top local cohomology `H^dim_m(R)` of a cone over a
/// degree window, with multiplication and Frobenius maps.
///
/// The piece in degree `t` is `H^{dim-1}(X, O_X(t))`. Multiplication by a
/// coordinate raises the degree by one and Frobenius multiplies it by `p`.
#[derive(Clone, Debug)]
pub struct LocalCohTable {
    ring: ConeRing,
    lo: i64,
    hi: i64,
    pieces: Vec<CohGroup>,
    mult: Vec<Vec<Matrix>>,
    frob: Vec<Option<Matrix>>,
    all_dims: BTreeMap<usize, Vec<usize>>,
}

/// Builds the local cohomology table of the cone over `V(h)`.
pub fn cone_local_coh_table(h: &GradedPoly, window: (i64, i64)) -> Result<LocalCohTable> {
    let n = h.nvars().saturating_sub(1);
    check_hypersurface(n, h)?;
    if n < 2 {
        return Err(Error::UnsupportedDimension("cone over points has no H^2".into()));
    }
    if !is_smooth_hypersurface(h)? {
        return Err(Error::NonNormal("projective hypersurface is singular".into()));
    }
    LocalCohTable::build(ConeRing::Hypersurface { h: h.clone() }, window)
}

/// Builds the table for a polynomial ring in `nvars >= 2` variables.
pub fn polynomial_local_coh_table(field: &Field, nvars: usize, window: (i64, i64)) -> Result<LocalCohTable> {
    if !(2..=MAX_AMBIENT_DIM + 1).contains(&nvars) {
        return Err(Error::UnsupportedDimension(format!("{nvars} variables")));
    }
    LocalCohTable::build(
        ConeRing::Polynomial {
            field: field.clone(),
            nvars,
        },
        window,
    )
}

impl LocalCohTable {
    fn build(ring: ConeRing, window: (i64, i64)) -> Result<Self> {
        let (lo, hi) = window;
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty window [{lo}, {hi}]")));
        }
        check_twist(lo)?;
        check_twist(hi)?;
        let p = ring.field().p() as i64;
        let pieces: Vec<CohGroup> = (lo..=hi).map(|t| ring.top_piece(t)).collect();
        let mut table = LocalCohTable {
            ring,
            lo,
            hi,
            pieces,
            mult: Vec::new(),
            frob: Vec::new(),
            all_dims: BTreeMap::new(),
        };
        for t in lo..hi {
            let maps = (0..table.ring.ngens())
                .map(|j| table.mult_between(table.piece(t), table.piece(t + 1), j))
                .collect::<Result<Vec<_>>>()?;
            table.mult.push(maps);
        }
        for t in lo..=hi {
            let m = if table.contains(p * t) {
                Some(frobenius_between(table.piece(t), table.piece(p * t), 1)?)
            } else {
                None
            };
            table.frob.push(m);
        }
        for i in 2..=table.ring.dim() {
            let dims = (lo..=hi).map(|t| table.ring.local_coh_dim(i, t)).collect();
            table.all_dims.insert(i, dims);
        }
        Ok(table)
    }

    fn mult_between(&self, src: &CohGroup, tgt: &CohGroup, j: usize) -> Result<Matrix> {
        let field = self.field();
        let g = Grading::standard(self.ring.ngens());
        let x = GradedPoly::var(field, &g, j);
        induced_map(src, tgt, 0, &x, &x)
    }

    pub fn ring(&self) -> &ConeRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, t: i64) -> bool {
        (self.lo..=self.hi).contains(&t)
    }

    pub fn ngens(&self) -> usize {
        self.ring.ngens()
    }

    /// Index of the top local cohomology module.
    pub fn top_index(&self) -> usize {
        self.ring.dim()
    }

    pub fn piece(&self, t: i64) -> &CohGroup {
        &self.pieces[(t - self.lo) as usize]
    }

    pub fn dim(&self, t: i64) -> usize {
        self.piece(t).dim()
    }

    /// Dimensions of the top module over the window.
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(CohGroup::dim).collect()
    }

    /// Dimensions of `H^i_m(R)_t` over the window for each `2 <= i <= dim R`.
    pub fn all_dims(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.all_dims
    }

    /// Multiplication by generator `j` on the degree-`t` piece, inside the window.
    pub fn mult_map(&self, t: i64, j: usize) -> Option<&Matrix> {
        if t < self.lo || t >= self.hi {
            return None;
        }
        self.mult[(t - self.lo) as usize].get(j)
    }

    /// Frobenius on the degree-`t` piece, when `p t` lies in the window.
    pub fn frob_map(&self, t: i64) -> Option<&Matrix> {
        if !self.contains(t) {
            return None;
        }
        self.frob[(t - self.lo) as usize].as_ref()
    }

    /// Images of `v` (degree `t`) that leave the window under one
    /// multiplication or one Frobenius step, computed on demand.
    pub fn exit_images(&self, t: i64, v: &[Fe]) -> Result<Vec<(i64, Vec<Fe>)>> {
        let mut out = Vec::new();
        let src = self.piece(t);
        if t == self.hi {
            let tgt = self.ring.top_piece(t + 1);
            for j in 0..self.ngens() {
                out.push((t + 1, self.mult_between(src, &tgt, j)?.mul_vec(v)));
            }
        }
        let pt = self.field().p() as i64 * t;
        if !self.contains(pt) {
            let tgt = self.ring.top_piece(pt);
            let f = self.field();
            out.push((pt, frobenius_between(src, &tgt, 1)?.mul_vec(&crate::linalg::vec_frobenius(f, v, 1))));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn xyz(f: &Field, s: &str) -> GradedPoly {
        GradedPoly::parse(f, &Grading::standard(3), &["x", "y", "z"], s).unwrap()
    }

    fn st(f: &Field, s: &str) -> GradedPoly {
        GradedPoly::parse(f, &Grading::standard(2), &["s", "t"], s).unwrap()
    }

    #[test]
    fn projective_space_groups() {
        let k = field(2);
        let g = pn_coh(&k, 1, 1, -2).unwrap();
        assert_eq!(g.monomial_basis().unwrap(), &[vec![-1, -1]]);
        let g = pn_coh(&k, 2, 2, -3).unwrap();
        assert_eq!(g.monomial_basis().unwrap(), &[vec![-1, -1, -1]]);
        assert!(pn_coh(&k, 1, 1, 0).unwrap().is_zero());
        assert_eq!(pn_coh(&k, 2, 0, 2).unwrap().dim(), 6);
        assert_eq!(pn_coh(&k, 2, 1, -5).unwrap().dim(), 0);
    }

    #[test]
    fn hypersurface_dimensions() {
        let k5 = field(5);
        let conic = xyz(&k5, "x^2+y^2+z^2");
        assert_eq!(hyp_coh(2, &conic, 1, -1).unwrap().dim(), 1);
        let cubic = xyz(&field(2), "y^2*z+y*z^2+x^3");
        assert_eq!(hyp_coh(2, &cubic, 1, 0).unwrap().dim(), 1);
        assert_eq!(hyp_coh(2, &cubic, 0, 0).unwrap().dim(), 1);
        let quartic = xyz(&field(2), "x^4+y^4+z^4+x^2*y*z+y^3*z");
        assert_eq!(hyp_coh(2, &quartic, 1, 1).unwrap().dim(), 1);
        assert_eq!(hyp_coh(2, &quartic, 1, 0).unwrap().dim(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let k = field(2);
        let h = xyz(&k, "x^7+y^7+z^7");
        assert!(matches!(hyp_coh(2, &h, 1, 0), Err(Error::UnsupportedDimension(_))));
        let c = xyz(&k, "x^2+y*z");
        assert!(matches!(hyp_coh(2, &c, 1, -65), Err(Error::UnsupportedDimension(_))));
        assert!(hyp_coh(2, &c, 2, 0).is_err());
    }

    #[test]
    fn frobenius_on_cubics() {
        let k = field(2);
        let ss = xyz(&k, "y^2*z+y*z^2+x^3");
        let m = hyp_frobenius(2, &ss, 1, 0, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.is_zero());
        let ord = xyz(&k, "y^2*z+x*y*z+x^3+z^3");
        assert_eq!(hyp_frobenius(2, &ord, 1, 0, 1).unwrap().get(0, 0), Fe::ONE);
        let quartic = xyz(&k, "x^4+y^4+z^4+x^2*y*z+y^3*z");
        let m = hyp_frobenius(2, &quartic, 1, 1, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
    }

    #[test]
    fn pullbacks() {
        let k = field(2);
        let m = p1_pullback((&st(&k, "s^2"), &st(&k, "t^2")), -2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert!(m.is_injective());
        let id = p1_pullback((&st(&k, "s"), &st(&k, "t")), -4).unwrap();
        assert_eq!(id, Matrix::identity(&k, 3));
        assert_eq!(
            p1_pullback((&st(&k, "s*t"), &st(&k, "s^2")), -2).unwrap_err(),
            Error::DegenerateMap
        );
    }

    #[test]
    fn quadric_cone_table() {
        let k = field(5);
        let t = cone_local_coh_table(&xyz(&k, "x^2+y^2+z^2"), (-6, -1)).unwrap();
        assert_eq!(t.dims(), vec![11, 9, 7, 5, 3, 1]);
        assert_eq!(t.all_dims()[&2], t.dims());
        let cubic = cone_local_coh_table(&xyz(&field(2), "y^2*z+y*z^2+x^3"), (0, 0)).unwrap();
        assert_eq!(cubic.dims(), vec![1]);
        let pos = cone_local_coh_table(&xyz(&field(2), "y^2*z+y*z^2+x^3"), (1, 2)).unwrap();
        assert_eq!(pos.dims(), vec![0, 0]);
    }

    #[test]
    fn singular_cones_are_refused() {
        let k = field(3);
        assert!(matches!(
            cone_local_coh_table(&xyz(&k, "x^2+y^2"), (-2, -1)),
            Err(Error::NonNormal(_))
        ));
        assert!(is_smooth_hypersurface(&xyz(&field(2), "x^2+y*z")).unwrap());
        assert!(!is_smooth_hypersurface(&xyz(&field(2), "x^2+y^2+z^2")).unwrap());
    }
}
