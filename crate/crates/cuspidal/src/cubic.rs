//! Exact geometry of the nodal cubic `x^3 + y^3 = xyz` over the field
//! generated by a primitive cube root of unity.
//!
//! The smooth locus is parametrized by `t -> (t, -t^2, t^3 - 1)` with the
//! node at `t = 0` (and at infinity). Three points are collinear exactly
//! when their parameters multiply to 1. The three flexes sit at the cube
//! roots of unity, the three sextactic points at their negatives, and a
//! one-parameter family of conics written down below degenerates to double
//! tangent lines precisely at the flexes. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicError {
    #[error("projective point needs a nonzero coordinate")]
    ZeroPoint,
    #[error("collinearity of parameters is defined away from the node (t = 0)")]
    NodeParameter,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot parse rational number from {0:?}")]
    Parse(String),
    #[error("product rule and determinant disagree on a collinearity sample")]
    CollinearityMismatch,
}

/// An element `a + b*w` of the quadratic field with `w^2 + w + 1 = 0`.
///
/// Serializes as `{"a": "21", "b": "-1/3"}` with reduced fractions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycRational {
    pub a: BigRational,
    pub b: BigRational,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycRational { a, b }
    }

    /// `a + b*w` with integer parts.
    pub fn from_ints(a: i64, b: i64) -> Self {
        CycRational { a: big(a), b: big(b) }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn rational(r: BigRational) -> Self {
        CycRational { a: r, b: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Image under the nontrivial field automorphism `w -> w^2 = -1 - w`.
    pub fn conjugate(&self) -> Self {
        CycRational {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    /// Field norm `z * conj(z) = a^2 - a*b + b^2`, a non-negative rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self, CubicError> {
        if self.is_zero() {
            return Err(CubicError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(CycRational {
            a: c.a / &n,
            b: c.b / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CubicError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl Add for &CycRational {
    type Output = CycRational;
    fn add(self, rhs: &CycRational) -> CycRational {
        CycRational {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &CycRational {
    type Output = CycRational;
    fn sub(self, rhs: &CycRational) -> CycRational {
        CycRational {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &CycRational {
    type Output = CycRational;
    fn mul(self, rhs: &CycRational) -> CycRational {
        // (a + b*w)(c + d*w) with w^2 = -1 - w
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        CycRational {
            a: a * c - b * d,
            b: a * d + b * c - b * d,
        }
    }
}

impl Neg for &CycRational {
    type Output = CycRational;
    fn neg(self) -> CycRational {
        CycRational {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Add for CycRational {
    type Output = CycRational;
    fn add(self, rhs: CycRational) -> CycRational {
        &self + &rhs
    }
}

impl Sub for CycRational {
    type Output = CycRational;
    fn sub(self, rhs: CycRational) -> CycRational {
        &self - &rhs
    }
}

impl Mul for CycRational {
    type Output = CycRational;
    fn mul(self, rhs: CycRational) -> CycRational {
        &self * &rhs
    }
}

impl Neg for CycRational {
    type Output = CycRational;
    fn neg(self) -> CycRational {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Result<BigRational, CubicError> {
    let bad = || CubicError::Parse(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let w_part = if self.b.is_one() {
            "w".to_string()
        } else if self.b == -BigRational::one() {
            "-w".to_string()
        } else {
            format!("{}*w", fmt_rat(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{w_part}")
        } else if w_part.starts_with('-') {
            write!(f, "{}{}", fmt_rat(&self.a), w_part)
        } else {
            write!(f, "{}+{}", fmt_rat(&self.a), w_part)
        }
    }
}

impl fmt::Debug for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    a: String,
    b: String,
}

impl Serialize for CycRational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        CycRepr {
            a: fmt_rat(&self.a),
            b: fmt_rat(&self.b),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CycRational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = CycRepr::deserialize(de)?;
        Ok(CycRational {
            a: parse_rat(&repr.a).map_err(D::Error::custom)?,
            b: parse_rat(&repr.b).map_err(D::Error::custom)?,
        })
    }
}

/// A point of the projective plane, stored with its first nonzero
/// coordinate scaled to 1 so that equal points compare equal.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: [CycRational; 3],
}

impl ProjPoint {
    pub fn new(coords: [CycRational; 3]) -> Result<Self, CubicError> {
        let pivot = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(CubicError::ZeroPoint)?
            .clone();
        let inv = pivot.inverse()?;
        Ok(ProjPoint {
            coords: [&coords[0] * &inv, &coords[1] * &inv, &coords[2] * &inv],
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([
            CycRational::from_ints(x, 0),
            CycRational::from_ints(y, 0),
            CycRational::from_ints(z, 0),
        ])
        .expect("nonzero integer point")
    }

    pub fn coords(&self) -> &[CycRational; 3] {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The parametrization `t -> (t : -t^2 : t^3 - 1)` of the cubic.
pub fn phi_param(t: &CycRational) -> ProjPoint {
    let t2 = t * t;
    let t3 = &t2 * t;
    ProjPoint::new([t.clone(), -&t2, &t3 - &CycRational::one()])
        .expect("never identically zero")
}

/// Value of the defining form `x^3 + y^3 - xyz` at a point; zero exactly on
/// the cubic.
pub fn cubic_value(p: &ProjPoint) -> CycRational {
    let [x, y, z] = p.coords();
    let x3 = x.pow(3);
    let y3 = y.pow(3);
    &(&x3 + &y3) - &(&(x * y) * z)
}

/// The node `(0 : 0 : 1)`, the image of the parameters 0 and infinity.
pub fn node() -> ProjPoint {
    ProjPoint::from_ints(0, 0, 1)
}

/// The three flexes, images of the cube roots of unity.
pub fn flexes() -> [ProjPoint; 3] {
    let w = CycRational::omega();
    let w2 = w.pow(2);
    [
        ProjPoint::from_ints(1, -1, 0),
        ProjPoint::new([CycRational::one(), -&w, CycRational::zero()]).expect("nonzero"),
        ProjPoint::new([CycRational::one(), -&w2, CycRational::zero()]).expect("nonzero"),
    ]
}

/// The three sextactic points, images of the negated cube roots of unity.
pub fn sextactic_points() -> [ProjPoint; 3] {
    let w = CycRational::omega();
    [
        phi_param(&-&CycRational::one()),
        phi_param(&-&w),
        phi_param(&-&w.pow(2)),
    ]
}

/// Three smooth points of the cubic are collinear exactly when their
/// parameters multiply to 1. In debug builds the verdict is cross-checked
/// against the vanishing of the coordinate determinant whenever the three
/// parameters are distinct.
pub fn params_collinear(
    t1: &CycRational,
    t2: &CycRational,
    t3: &CycRational,
) -> Result<bool, CubicError> {
    if t1.is_zero() || t2.is_zero() || t3.is_zero() {
        return Err(CubicError::NodeParameter);
    }
    let verdict = &(t1 * t2) * t3 == CycRational::one();
    #[cfg(debug_assertions)]
    {
        if t1 != t2 && t2 != t3 && t1 != t3 {
            let rows = [phi_param(t1), phi_param(t2), phi_param(t3)];
            let m: Matrix3 = [
                rows[0].coords().clone(),
                rows[1].coords().clone(),
                rows[2].coords().clone(),
            ];
            debug_assert_eq!(
                det3(&m).is_zero(),
                verdict,
                "collinearity routes disagree at ({t1}, {t2}, {t3})"
            );
        }
    }
    Ok(verdict)
}

/// A plane conic via its six coefficients on `x^2, y^2, z^2, xy, xz, yz`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conic {
    pub coeffs: [CycRational; 6],
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = &self.coeffs;
        write!(f, "conic[{a}, {b}, {c}, {d}, {e}, {g}]")
    }
}

impl Conic {
    pub fn evaluate(&self, p: &ProjPoint) -> CycRational {
        let [x, y, z] = p.coords();
        let [a, b, c, d, e, f] = &self.coeffs;
        let mut acc = &(a * x) * x;
        acc = &acc + &(&(b * y) * y);
        acc = &acc + &(&(c * z) * z);
        acc = &acc + &(&(d * x) * y);
        acc = &acc + &(&(e * x) * z);
        acc = &acc + &(&(f * y) * z);
        acc
    }

    /// The symmetric matrix of the conic (off-diagonal entries are half the
    /// mixed coefficients).
    pub fn matrix(&self) -> Matrix3 {
        let [a, b, c, d, e, f] = &self.coeffs;
        let half = CycRational::rational(BigRational::new(BigInt::one(), BigInt::from(2)));
        let hd = &half * d;
        let he = &half * e;
        let hf = &half * f;
        [
            [a.clone(), hd.clone(), he.clone()],
            [hd, b.clone(), hf.clone()],
            [he, hf, c.clone()],
        ]
    }

    pub fn from_matrix(m: &Matrix3) -> Self {
        let two = CycRational::from_ints(2, 0);
        Conic {
            coeffs: [
                m[0][0].clone(),
                m[1][1].clone(),
                m[2][2].clone(),
                &two * &m[0][1],
                &two * &m[0][2],
                &two * &m[1][2],
            ],
        }
    }

    /// Whether the conic is a double line or a pair of lines.
    pub fn is_degenerate(&self) -> bool {
        det3(&self.matrix()).is_zero()
    }

    /// Same conic up to a scalar.
    pub fn equivalent(&self, other: &Conic) -> bool {
        proportional(&self.coeffs, &other.coeffs)
    }

    /// Substitute the parametrization of the cubic into the conic: the
    /// result is the degree six polynomial in `t`, coefficients in
    /// descending degree order.
    pub fn restrict_to_cubic(&self) -> [CycRational; 7] {
        let [a, b, c, d, e, f] = &self.coeffs;
        let two_c = &CycRational::from_ints(2, 0) * c;
        [
            c.clone(),
            -f,
            b + e,
            -&(&two_c + d),
            a + f,
            -e,
            c.clone(),
        ]
    }

    /// Image of the conic under the projective transformation `m`:
    /// the matrix becomes `(m^-1)^T Q m^-1`.
    pub fn transformed(&self, m: &Matrix3) -> Result<Conic, CubicError> {
        let inv = matrix_inverse(m)?;
        let q = self.matrix();
        let result = mat_mul(&mat_transpose(&inv), &mat_mul(&q, &inv));
        Ok(Conic::from_matrix(&result))
    }

    /// The polar line of the conic at a point; for a point on the conic
    /// this is the tangent line there.
    pub fn tangent_line_at(&self, p: &ProjPoint) -> [CycRational; 3] {
        mat_vec(&self.matrix(), p.coords())
    }
}

/// A member of the conic pencil attached to the parameter `alpha`.
///
/// For `alpha^6 = 1, alpha^3 != 1` it is the sextactic conic meeting the
/// cubic to order six at the sextactic point; for `alpha^3 = 1` it
/// degenerates into the doubled tangent line at the flex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SextacticConic {
    Irreducible(Conic),
    DoubleTangentLine { line: [CycRational; 3], conic: Conic },
}

/// The conic family `(a, b, c, d, e, f)` with
/// `a = 15a^4 - 6a`, `b = 15a^2 - 6a^5`, `c = 1`, `d = 20a^3 - 2`,
/// `e = 6a^5`, `f = 6a` evaluated at `alpha`.
pub fn sextactic_conic(alpha: &CycRational) -> SextacticConic {
    let n = |k: i64| CycRational::from_ints(k, 0);
    let a2 = alpha.pow(2);
    let a3 = alpha.pow(3);
    let a4 = alpha.pow(4);
    let a5 = alpha.pow(5);
    let conic = Conic {
        coeffs: [
            &(&n(15) * &a4) - &(&n(6) * alpha),
            &(&n(15) * &a2) - &(&n(6) * &a5),
            CycRational::one(),
            &(&n(20) * &a3) - &n(2),
            &n(6) * &a5,
            &n(6) * alpha,
        ],
    };
    if conic.is_degenerate() {
        // alpha is a cube root of unity and the conic is the square of the
        // inflectional tangent 3a^2 x + 3a y + z
        let line = [&n(3) * &a2, &n(3) * alpha, CycRational::one()];
        SextacticConic::DoubleTangentLine { line, conic }
    } else {
        SextacticConic::Irreducible(conic)
    }
}

/// Substitute the parametrization into a line `l0 x + l1 y + l2 z`; the
/// result is a cubic polynomial in `t`, descending coefficients.
pub fn restrict_line_to_cubic(line: &[CycRational; 3]) -> [CycRational; 4] {
    let [l0, l1, l2] = line;
    [l2.clone(), -l1, l0.clone(), -l2]
}

pub type Matrix3 = [[CycRational; 3]; 3];

pub fn mat_identity() -> Matrix3 {
    let o = CycRational::one;
    let z = CycRational::zero;
    [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]]
}

pub fn mat_mul(x: &Matrix3, y: &Matrix3) -> Matrix3 {
    let mut out = mat_identity();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = CycRational::zero();
            for k in 0..3 {
                acc = &acc + &(&x[i][k] * &y[k][j]);
            }
            *cell = acc;
        }
    }
    out
}

pub fn mat_transpose(m: &Matrix3) -> Matrix3 {
    let mut out = m.clone();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[j][i].clone();
        }
    }
    out
}

pub fn mat_vec(m: &Matrix3, v: &[CycRational; 3]) -> [CycRational; 3] {
    let mut out = [CycRational::zero(), CycRational::zero(), CycRational::zero()];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut acc = CycRational::zero();
        for k in 0..3 {
            acc = &acc + &(&m[i][k] * &v[k]);
        }
        *slot = acc;
    }
    out
}

pub fn det3(m: &Matrix3) -> CycRational {
    let term = |a: &CycRational, b: &CycRational, c: &CycRational| &(a * b) * c;
    let pos = term(&m[0][0], &m[1][1], &m[2][2])
        + term(&m[0][1], &m[1][2], &m[2][0])
        + term(&m[0][2], &m[1][0], &m[2][1]);
    let neg = term(&m[0][2], &m[1][1], &m[2][0])
        + term(&m[0][0], &m[1][2], &m[2][1])
        + term(&m[0][1], &m[1][0], &m[2][2]);
    pos - neg
}

/// Inverse by adjugate over determinant.
pub fn matrix_inverse(m: &Matrix3) -> Result<Matrix3, CubicError> {
    let det = det3(m);
    if det.is_zero() {
        return Err(CubicError::SingularMatrix);
    }
    let inv_det = det.inverse()?;
    let minor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let val = &(&m[rows[0]][cols[0]] * &m[rows[1]][cols[1]])
            - &(&m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]);
        if (r + c) % 2 == 0 {
            val
        } else {
            -&val
        }
    };
    let mut out = mat_identity();
    for r in 0..3 {
        for c in 0..3 {
            // adjugate transposes the cofactor matrix
            out[c][r] = &minor(r, c) * &inv_det;
        }
    }
    Ok(out)
}

pub fn apply_to_point(m: &Matrix3, p: &ProjPoint) -> Result<ProjPoint, CubicError> {
    ProjPoint::new(mat_vec(m, p.coords()))
}

/// The three involutions of the plane that preserve the cubic and permute
/// its flexes: each fixes one flex and swaps the other two, and they act
/// the same way on the sextactic points and their conics.
pub fn flex_involutions() -> [Matrix3; 3] {
    let z = CycRational::zero;
    let o = CycRational::one;
    let w = CycRational::omega();
    let w2 = w.pow(2);
    [
        [[z(), o(), z()], [o(), z(), z()], [z(), z(), o()]],
        [
            [z(), w2.clone(), z()],
            [w.clone(), z(), z()],
            [z(), z(), o()],
        ],
        [[z(), w, z()], [w2, z(), z()], [z(), z(), o()]],
    ]
}

fn proportional(u: &[CycRational], v: &[CycRational]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    // cross-multiply against the first nonzero slot
    match u.iter().position(|c| !c.is_zero()) {
        None => v.iter().all(CycRational::is_zero),
        Some(k) => {
            if v[k].is_zero() {
                return false;
            }
            (0..u.len()).all(|i| &u[i] * &v[k] == &u[k] * &v[i])
        }
    }
}

/// Result of sampling the collinearity law with pseudo-random parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupLawReport {
    pub samples: usize,
    /// How many sampled triples were collinear.
    pub collinear: usize,
    /// How many triples had three distinct parameters and were also
    /// checked against the coordinate determinant.
    pub cross_checked: usize,
}

/// Sample `samples` parameter triples with a fixed-seed generator; odd
/// samples are completed to a collinear triple by `t3 = (t1 t2)^-1`. Every
/// triple with distinct parameters is verified against the determinant
/// criterion; a disagreement is an error.
pub fn group_law_samples(samples: usize, seed: u64) -> Result<GroupLawReport, CubicError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_param = |rng: &mut ChaCha8Rng| loop {
        let p = rng.gen_range(-9i64..=9);
        let q = rng.gen_range(-9i64..=9);
        let r = rng.gen_range(1i64..=9);
        if p != 0 || q != 0 {
            return CycRational::new(
                BigRational::new(BigInt::from(p), BigInt::from(r)),
                BigRational::new(BigInt::from(q), BigInt::from(r)),
            );
        }
    };
    let mut collinear = 0;
    let mut cross_checked = 0;
    for k in 0..samples {
        let t1 = random_param(&mut rng);
        let t2 = random_param(&mut rng);
        let t3 = if k % 2 == 0 {
            random_param(&mut rng)
        } else {
            (&t1 * &t2).inverse()?
        };
        let verdict = params_collinear(&t1, &t2, &t3)?;
        if verdict {
            collinear += 1;
        }
        if t1 != t2 && t2 != t3 && t1 != t3 {
            let m: Matrix3 = [
                phi_param(&t1).coords().clone(),
                phi_param(&t2).coords().clone(),
                phi_param(&t3).coords().clone(),
            ];
            if det3(&m).is_zero() != verdict {
                return Err(CubicError::CollinearityMismatch);
            }
            cross_checked += 1;
        }
    }
    Ok(GroupLawReport {
        samples,
        collinear,
        cross_checked,
    })
}
