//! Bounded cochain complexes of finite-dimensional vector spaces, canonical
//! truncations, and null-homotopy witnesses for composites of maps that are
//! zero on staggered cohomology degrees.
//!
//! For maps `f_i: K_i -> K_{i+1}` (`1 <= i <= d`) between complexes with
//! cohomology in `[1, d]`, if `H^{d+1-i}(f_i) = 0` for all `i` then the
//! composite `K_1 -> K_{d+1}` is null-homotopic. [`compose_null_witness`]
//! checks the hypothesis and produces the homotopy by a linear solve.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{vec_is_zero, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    field: Field,
    lo: i64,
    dims: Vec<usize>,
    /// `diffs[k]` maps degree `lo + k` to `lo + k + 1`.
    diffs: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(field: &Field, lo: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(Error::ShapeMismatch(format!(
                    "differential out of degree {} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    d.rows(),
                    d.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1]).is_zero() {
                return Err(Error::IdentityFailure(format!(
                    "d∘d is nonzero out of degree {}",
                    lo + k as i64 - 1
                )));
            }
        }
        Ok(CochainComplex {
            field: field.clone(),
            lo,
            dims,
            diffs,
        })
    }

    /// The complex with every differential zero.
    pub fn zero_differentials(field: &Field, lo: i64, dims: Vec<usize>) -> Self {
        let diffs = dims.windows(2).map(|w| Matrix::zeros(field, w[1], w[0])).collect();
        CochainComplex::new(field, lo, dims, diffs).expect("zero differentials")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    /// Dimension in degree `i`, zero outside the range.
    pub fn dim(&self, i: i64) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.dims[(i - self.lo) as usize]
        }
    }

    /// Differential out of degree `i`.
    pub fn diff(&self, i: i64) -> Matrix {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            Matrix::zeros(&self.field, self.dim(i + 1), self.dim(i))
        }
    }

    fn boundaries(&self, i: i64) -> Subspace {
        Subspace::span(&self.field, self.dim(i), &self.diff(i - 1).image())
    }

    pub fn cohomology(&self, i: i64) -> Cohomology {
        let image = self.boundaries(i);
        let mut span = image.clone();
        let mut reps = Vec::new();
        for z in self.diff(i).kernel() {
            if span.insert(&z) {
                reps.push(z);
            }
        }
        Cohomology {
            field: self.field.clone(),
            ambient: self.dim(i),
            image,
            reps,
        }
    }

    /// Degrees whose cohomology is nonzero.
    pub fn support(&self) -> Vec<i64> {
        (self.lo..=self.hi()).filter(|&i| self.cohomology(i).dim() > 0).collect()
    }

    /// Canonical truncation `τ≤n`: degree `n` becomes `ker d_n`.
    pub fn truncate_le(&self, n: i64) -> CochainComplex {
        if n >= self.hi() {
            return self.clone();
        }
        if n < self.lo {
            return CochainComplex::zero_differentials(&self.field, self.lo, vec![0]);
        }
        let kernel = Subspace::span(&self.field, self.dim(n), &self.diff(n).kernel());
        let mut dims: Vec<usize> = (self.lo..n).map(|i| self.dim(i)).collect();
        dims.push(kernel.dim());
        let mut diffs: Vec<Matrix> = (self.lo..n - 1).map(|i| self.diff(i)).collect();
        if n > self.lo {
            let d = self.diff(n - 1);
            let cols: Vec<Vec<Fe>> = (0..d.cols())
                .map(|j| kernel.coords(&d.col(j)).expect("boundaries are cycles"))
                .collect();
            diffs.push(Matrix::from_cols(&self.field, kernel.dim(), &cols));
        }
        CochainComplex::new(&self.field, self.lo, dims, diffs).expect("truncation is a complex")
    }

    /// Canonical truncation `τ≥n`: degree `n` becomes `coker d_{n-1}`.
    pub fn truncate_ge(&self, n: i64) -> CochainComplex {
        if n <= self.lo {
            return self.clone();
        }
        if n > self.hi() {
            return CochainComplex::zero_differentials(&self.field, self.hi(), vec![0]);
        }
        let image = self.boundaries(n);
        let positions = image.complement_positions();
        let mut dims = vec![positions.len()];
        dims.extend((n + 1..=self.hi()).map(|i| self.dim(i)));
        let mut diffs = Vec::new();
        if n < self.hi() {
            let d = self.diff(n);
            let cols: Vec<Vec<Fe>> = positions.iter().map(|&j| d.col(j)).collect();
            diffs.push(Matrix::from_cols(&self.field, d.rows(), &cols));
            diffs.extend((n + 1..self.hi()).map(|i| self.diff(i)));
        }
        CochainComplex::new(&self.field, n, dims, diffs).expect("truncation is a complex")
    }
}

/// `ker d_i / im d_{i-1}` with cycle representatives of a basis.
#[derive(Clone, Debug)]
pub struct Cohomology {
    field: Field,
    ambient: usize,
    image: Subspace,
    reps: Vec<Vec<Fe>>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Vec<Fe>] {
        &self.reps
    }

    /// Coordinates of the class of a cycle `z`.
    pub fn coords(&self, z: &[Fe]) -> Option<Vec<Fe>> {
        let mut cols: Vec<Vec<Fe>> = self.image.basis().to_vec();
        cols.extend(self.reps.iter().cloned());
        let m = Matrix::from_cols(&self.field, self.ambient, &cols);
        let x = m.solve(z)?;
        Some(x[self.image.dim()..].to_vec())
    }

    /// Linear functionals whose joint kernel is the space of boundaries.
    fn boundary_test(&self) -> Matrix {
        let positions = self.image.complement_positions();
        let cols: Vec<Vec<Fe>> = (0..self.ambient)
            .map(|j| {
                let mut e = vec![Fe::ZERO; self.ambient];
                e[j] = Fe::ONE;
                self.image.quotient_coords(&e)
            })
            .collect();
        Matrix::from_cols(&self.field, positions.len(), &cols)
    }
}

/// A morphism of complexes, one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: CochainComplex,
    target: CochainComplex,
    lo: i64,
    mats: Vec<Matrix>,
}

fn joint_range(a: &CochainComplex, b: &CochainComplex) -> (i64, i64) {
    (a.lo().min(b.lo()), a.hi().max(b.hi()))
}

impl ChainMap {
    /// `mats` covers the union of the two degree ranges, lowest degree first.
    pub fn new(source: CochainComplex, target: CochainComplex, mats: Vec<Matrix>) -> Result<Self> {
        let (lo, hi) = joint_range(&source, &target);
        if mats.len() as i64 != hi - lo + 1 {
            return Err(Error::ShapeMismatch(format!(
                "chain map needs {} matrices, got {}",
                hi - lo + 1,
                mats.len()
            )));
        }
        for (k, m) in mats.iter().enumerate() {
            let i = lo + k as i64;
            if m.rows() != target.dim(i) || m.cols() != source.dim(i) {
                return Err(Error::ShapeMismatch(format!("chain map component in degree {i}")));
            }
        }
        let map = ChainMap {
            source,
            target,
            lo,
            mats,
        };
        for i in lo..hi {
            let left = map.target.diff(i).mul(map.component(i));
            let right = map.component(i + 1).mul(&map.source.diff(i));
            if left != right {
                return Err(Error::IdentityFailure(format!("chain map does not commute in degree {i}")));
            }
        }
        Ok(map)
    }

    pub fn zero(source: &CochainComplex, target: &CochainComplex) -> Self {
        let (lo, hi) = joint_range(source, target);
        let mats = (lo..=hi)
            .map(|i| Matrix::zeros(source.field(), target.dim(i), source.dim(i)))
            .collect();
        ChainMap::new(source.clone(), target.clone(), mats).expect("zero map")
    }

    pub fn identity(k: &CochainComplex) -> Self {
        let mats = (k.lo()..=k.hi()).map(|i| Matrix::identity(k.field(), k.dim(i))).collect();
        ChainMap::new(k.clone(), k.clone(), mats).expect("identity map")
    }

    pub fn source(&self) -> &CochainComplex {
        &self.source
    }

    pub fn target(&self) -> &CochainComplex {
        &self.target
    }

    fn component(&self, i: i64) -> &Matrix {
        &self.mats[(i - self.lo) as usize]
    }

    /// Component in degree `i`, zero outside the range.
    pub fn at(&self, i: i64) -> Matrix {
        let hi = self.lo + self.mats.len() as i64 - 1;
        if i < self.lo || i > hi {
            Matrix::zeros(self.source.field(), self.target.dim(i), self.source.dim(i))
        } else {
            self.component(i).clone()
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("maps are not composable".into()));
        }
        let (lo, hi) = joint_range(&self.source, &other.target);
        let mats = (lo..=hi).map(|i| other.at(i).mul(&self.at(i))).collect();
        ChainMap::new(self.source.clone(), other.target.clone(), mats)
    }

    /// Matrix of the induced map `H^i(source) -> H^i(target)`.
    pub fn on_cohomology(&self, i: i64) -> Matrix {
        let hs = self.source.cohomology(i);
        let ht = self.target.cohomology(i);
        let f = self.at(i);
        let cols: Vec<Vec<Fe>> = hs
            .representatives()
            .iter()
            .map(|z| ht.coords(&f.mul_vec(z)).expect("cycles map to cycles"))
            .collect();
        Matrix::from_cols(self.source.field(), ht.dim(), &cols)
    }
}

/// Maps `h_i` from degree `i` of a source to degree `i-1` of a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    lo: i64,
    mats: Vec<Matrix>,
}

impl Homotopy {
    /// Lowest source degree with a stored component.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn components(&self) -> &[Matrix] {
        &self.mats
    }

    /// Component out of source degree `i`.
    pub fn at(&self, i: i64) -> Option<&Matrix> {
        if i < self.lo {
            return None;
        }
        self.mats.get((i - self.lo) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// Checks `f_i = d h_i + h_{i+1} d` in every degree.
    pub fn verifies(&self, f: &ChainMap) -> bool {
        let (s, t) = (f.source(), f.target());
        let (lo, hi) = joint_range(s, t);
        let field = s.field();
        let h = |i: i64| {
            self.at(i)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(field, t.dim(i - 1), s.dim(i)))
        };
        (lo..=hi).all(|i| {
            let sum = t.diff(i - 1).mul(&h(i)).add(&h(i + 1).mul(&s.diff(i)));
            sum == f.at(i)
        })
    }
}

/// Solves `f = d h + h d` for `h`, or returns `None` when `f` is not
/// null-homotopic.
pub fn null_homotopy(f: &ChainMap) -> Option<Homotopy> {
    let (s, t) = (f.source(), f.target());
    let field = s.field();
    let (lo, hi) = joint_range(s, t);
    // Unknown blocks h_i for i in lo..=hi+1, row-major.
    let mut offsets = Vec::new();
    let mut n_unknowns = 0;
    for i in lo..=hi + 1 {
        offsets.push(n_unknowns);
        n_unknowns += t.dim(i - 1) * s.dim(i);
    }
    let var = |i: i64, r: usize, c: usize| offsets[(i - lo) as usize] + r * s.dim(i) + c;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in lo..=hi {
        let dt = t.diff(i - 1);
        let ds = s.diff(i);
        let fi = f.at(i);
        for r in 0..t.dim(i) {
            for c in 0..s.dim(i) {
                let mut row = vec![Fe::ZERO; n_unknowns];
                for k in 0..t.dim(i - 1) {
                    let a = dt.get(r, k);
                    if !a.is_zero() {
                        let slot = &mut row[var(i, k, c)];
                        *slot = field.add(*slot, a);
                    }
                }
                for k in 0..s.dim(i + 1) {
                    let a = ds.get(k, c);
                    if !a.is_zero() {
                        let slot = &mut row[var(i + 1, r, k)];
                        *slot = field.add(*slot, a);
                    }
                }
                rows.push(row);
                rhs.push(fi.get(r, c));
            }
        }
    }
    let sol = if rows.is_empty() {
        vec![Fe::ZERO; n_unknowns]
    } else {
        Matrix::from_rows(field, n_unknowns, &rows).solve(&rhs)?
    };
    let mats = (lo..=hi + 1)
        .map(|i| {
            let (r, c) = (t.dim(i - 1), s.dim(i));
            let start = offsets[(i - lo) as usize];
            let entries: Vec<Vec<Fe>> = (0..r).map(|a| sol[start + a * c..start + (a + 1) * c].to_vec()).collect();
            if r == 0 {
                Matrix::zeros(field, 0, c)
            } else {
                Matrix::from_rows(field, c, &entries)
            }
        })
        .collect();
    Some(Homotopy { lo, mats })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    /// Null-homotopy of the composite `K_1 -> K_{d+1}`, re-verified.
    Homotopy(Homotopy),
    /// `H^degree(f_index)` is nonzero (`index` counts from 1).
    HypothesisViolated { index: usize, degree: i64 },
}

/// For composable `f_1, …, f_d` between complexes supported in `[1, d]`,
/// checks `H^{d+1-i}(f_i) = 0` and returns a null-homotopy of the composite.
pub fn compose_null_witness(maps: &[ChainMap]) -> Result<LemmaOutcome> {
    let d = maps.len() as i64;
    if d == 0 {
        return Err(Error::ShapeMismatch("no maps".into()));
    }
    for w in maps.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(Error::ShapeMismatch("maps are not composable".into()));
        }
    }
    let complexes = maps.iter().map(ChainMap::source).chain(std::iter::once(maps[maps.len() - 1].target()));
    for k in complexes {
        if k.lo() < 1 || k.hi() > d {
            return Err(Error::ShapeMismatch(format!(
                "complex in degrees [{}, {}] is not inside [1, {d}]",
                k.lo(),
                k.hi()
            )));
        }
    }
    for (idx, f) in maps.iter().enumerate() {
        let degree = d - idx as i64;
        if !f.on_cohomology(degree).is_zero() {
            return Ok(LemmaOutcome::HypothesisViolated { index: idx + 1, degree });
        }
    }
    let mut composite = maps[0].clone();
    for f in &maps[1..] {
        composite = composite.then(f)?;
    }
    let h = null_homotopy(&composite)
        .ok_or_else(|| Error::IdentityFailure("composite is not null-homotopic".into()))?;
    if !h.verifies(&composite) {
        return Err(Error::IdentityFailure("homotopy identity failed on re-check".into()));
    }
    Ok(LemmaOutcome::Homotopy(h))
}

fn random_fe<R: Rng>(rng: &mut R, field: &Field) -> Fe {
    Fe(rng.gen_range(0..field.order()))
}

fn random_matrix<R: Rng>(rng: &mut R, field: &Field, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_fe(rng, field));
        }
    }
    m
}

/// A random complex in degrees `[1, len]` with dimensions at most `max_dim`.
/// Each differential factors through the cokernel of the previous one, so
/// `d∘d = 0` holds by construction.
pub fn random_complex<R: Rng>(rng: &mut R, field: &Field, len: usize, max_dim: usize) -> CochainComplex {
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut diffs: Vec<Matrix> = Vec::new();
    for k in 0..len.saturating_sub(1) {
        let image = match diffs.last() {
            Some(prev) => Subspace::span(field, dims[k], &prev.image()),
            None => Subspace::zero(field, dims[k]),
        };
        let quotient_dim = dims[k] - image.dim();
        let cols: Vec<Vec<Fe>> = (0..dims[k])
            .map(|j| {
                let mut e = vec![Fe::ZERO; dims[k]];
                e[j] = Fe::ONE;
                image.quotient_coords(&e)
            })
            .collect();
        let project = Matrix::from_cols(field, quotient_dim, &cols);
        let r = random_matrix(rng, field, dims[k + 1], quotient_dim);
        diffs.push(r.mul(&project));
    }
    CochainComplex::new(field, 1, dims, diffs).expect("constructed complex")
}

/// A uniformly random element of the space of chain maps `source -> target`
/// inducing zero on `H^zero_degree`, sampled from a basis of the solution
/// space of the defining linear constraints.
pub fn random_chain_map_killing<R: Rng>(
    rng: &mut R,
    source: &CochainComplex,
    target: &CochainComplex,
    zero_degree: i64,
) -> ChainMap {
    let field = source.field();
    let (lo, hi) = joint_range(source, target);
    let mut offsets = Vec::new();
    let mut n = 0;
    for i in lo..=hi {
        offsets.push(n);
        n += target.dim(i) * source.dim(i);
    }
    let var = |i: i64, r: usize, c: usize| offsets[(i - lo) as usize] + r * source.dim(i) + c;
    let mut rows: Vec<Vec<Fe>> = Vec::new();
    // Commutation: d_T f_i - f_{i+1} d_S = 0.
    for i in lo..hi {
        let dt = target.diff(i);
        let ds = source.diff(i);
        for r in 0..target.dim(i + 1) {
            for c in 0..source.dim(i) {
                let mut row = vec![Fe::ZERO; n];
                for k in 0..target.dim(i) {
                    row[var(i, k, c)] = field.add(row[var(i, k, c)], dt.get(r, k));
                }
                for k in 0..source.dim(i + 1) {
                    let slot = var(i + 1, r, k);
                    row[slot] = field.sub(row[slot], ds.get(k, c));
                }
                rows.push(row);
            }
        }
    }
    // Cycles of H^zero_degree(source) must land in boundaries of the target.
    let hs = source.cohomology(zero_degree);
    let test = target.cohomology(zero_degree).boundary_test();
    for z in hs.representatives() {
        for q in 0..test.rows() {
            let mut row = vec![Fe::ZERO; n];
            for r in 0..target.dim(zero_degree) {
                let a = test.get(q, r);
                if a.is_zero() {
                    continue;
                }
                for (c, &zc) in z.iter().enumerate() {
                    let slot = var(zero_degree, r, c);
                    row[slot] = field.add(row[slot], field.mul(a, zc));
                }
            }
            rows.push(row);
        }
    }
    let solutions = if rows.is_empty() {
        (0..n)
            .map(|j| {
                let mut e = vec![Fe::ZERO; n];
                e[j] = Fe::ONE;
                e
            })
            .collect()
    } else {
        Matrix::from_rows(field, n, &rows).kernel()
    };
    let mut x = vec![Fe::ZERO; n];
    for s in &solutions {
        let c = random_fe(rng, field);
        for (xi, &si) in x.iter_mut().zip(s) {
            *xi = field.add(*xi, field.mul(c, si));
        }
    }
    let mats = (lo..=hi)
        .map(|i| {
            let (r, c) = (target.dim(i), source.dim(i));
            let mut m = Matrix::zeros(field, r, c);
            for a in 0..r {
                for b in 0..c {
                    m.set(a, b, x[var(i, a, b)]);
                }
            }
            m
        })
        .collect();
    ChainMap::new(source.clone(), target.clone(), mats).expect("sampled from the constraint kernel")
}

/// A random instance `f_1, …, f_d` satisfying the composite lemma's
/// hypothesis, with complexes in `[1, d]` of dimensions at most `max_dim`.
pub fn random_lemma_instance<R: Rng>(rng: &mut R, field: &Field, d: usize, max_dim: usize) -> Vec<ChainMap> {
    let complexes: Vec<CochainComplex> = (0..=d).map(|_| random_complex(rng, field, d, max_dim)).collect();
    (0..d)
        .map(|i| random_chain_map_killing(rng, &complexes[i], &complexes[i + 1], (d - i) as i64))
        .collect()
}

/// Whether `v` is a cycle in degree `i`.
pub fn is_cycle(k: &CochainComplex, i: i64, v: &[Fe]) -> bool {
    vec_is_zero(&k.diff(i).mul_vec(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(f: &Field, cols: usize, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<Fe>> = rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect();
        Matrix::from_rows(f, cols, &rows)
    }

    #[test]
    fn cohomology_examples() {
        let f = Field::prime(3).unwrap();
        let iso = CochainComplex::new(&f, 0, vec![1, 1], vec![m(&f, 1, &[&[1]])]).unwrap();
        assert_eq!(iso.support(), Vec::<i64>::new());
        let flat = CochainComplex::zero_differentials(&f, 1, vec![2, 3]);
        assert_eq!(flat.cohomology(1).dim(), 2);
        assert_eq!(flat.cohomology(2).dim(), 3);
        let f2 = Field::prime(2).unwrap();
        let three = CochainComplex::new(
            &f2,
            0,
            vec![2, 2, 0],
            vec![m(&f2, 2, &[&[1, 0], &[0, 0]]), Matrix::zeros(&f2, 0, 2)],
        )
        .unwrap();
        assert_eq!(three.cohomology(1).dim(), 1);
        assert_eq!(three.cohomology(0).dim(), 1);
    }

    #[test]
    fn d_squared_is_checked() {
        let f = Field::prime(2).unwrap();
        let one = m(&f, 1, &[&[1]]);
        assert!(matches!(
            CochainComplex::new(&f, 0, vec![1, 1, 1], vec![one.clone(), one]),
            Err(Error::IdentityFailure(_))
        ));
    }

    #[test]
    fn truncations() {
        let f = Field::prime(2).unwrap();
        let three = CochainComplex::new(
            &f,
            0,
            vec![2, 2, 1],
            vec![m(&f, 2, &[&[1, 0], &[0, 0]]), m(&f, 2, &[&[0, 1]])],
        )
        .unwrap();
        let le = three.truncate_le(1);
        assert_eq!(le.hi(), 1);
        for i in 0..=1 {
            assert_eq!(le.cohomology(i).dim(), three.cohomology(i).dim());
        }
        assert_eq!(le.cohomology(2).dim(), 0);
        let ge = three.truncate_ge(1);
        assert_eq!(ge.lo(), 1);
        assert_eq!(ge.cohomology(0).dim(), 0);
        for i in 1..=2 {
            assert_eq!(ge.cohomology(i).dim(), three.cohomology(i).dim());
        }
        assert_eq!(three.truncate_le(2), three);
        let flat = CochainComplex::zero_differentials(&f, 0, vec![1, 2, 3]);
        assert_eq!(flat.truncate_le(1).hi(), 1);
    }

    #[test]
    fn lemma_examples() {
        let f = Field::prime(2).unwrap();
        let k = CochainComplex::zero_differentials(&f, 1, vec![1, 1]);
        let zero = ChainMap::zero(&k, &k);
        match compose_null_witness(&[zero.clone(), zero]).unwrap() {
            LemmaOutcome::Homotopy(h) => assert!(h.is_zero()),
            other => panic!("{other:?}"),
        }
        let one = CochainComplex::zero_differentials(&f, 1, vec![1]);
        assert_eq!(
            compose_null_witness(&[ChainMap::identity(&one)]).unwrap(),
            LemmaOutcome::HypothesisViolated { index: 1, degree: 1 }
        );
    }

    #[test]
    fn nonzero_maps_with_staggered_vanishing() {
        // K = [F -> F] (acyclic) in degrees 1..2; L = F in degree 1 and 2, zero d.
        let f = Field::prime(3).unwrap();
        let acyclic = CochainComplex::new(&f, 1, vec![1, 1], vec![m(&f, 1, &[&[1]])]).unwrap();
        let flat = CochainComplex::zero_differentials(&f, 1, vec![1, 1]);
        // f_1: acyclic -> flat kills H^2 trivially; must commute: 0*f1_1 = f1_2 * 1.
        let f1 = ChainMap::new(acyclic.clone(), flat.clone(), vec![m(&f, 1, &[&[2]]), m(&f, 1, &[&[0]])]).unwrap();
        let f2 = ChainMap::new(flat.clone(), flat, vec![m(&f, 1, &[&[0]]), m(&f, 1, &[&[1]])]).unwrap();
        match compose_null_witness(&[f1, f2]).unwrap() {
            LemmaOutcome::Homotopy(_) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn random_instances_satisfy_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2, 3] {
            let f = Field::prime(p).unwrap();
            for d in [2, 3] {
                for _ in 0..10 {
                    let maps = random_lemma_instance(&mut rng, &f, d, 3);
                    match compose_null_witness(&maps).unwrap() {
                        LemmaOutcome::Homotopy(_) => {}
                        other => panic!("{other:?}"),
                    }
                }
            }
        }
    }
}
