//! Hurwitz quaternions and their rotation matrices.
//!
//! The algebra is Hamilton's `i² = j² = −1, ij = −ji` over Q and the order is
//! spanned by `1, i, j, w = (1+i+j+ij)/2`. A quaternion is stored doubled:
//! `(c0, c1, c2, c3)` means `(c0 + c1 i + c2 j + c3 ij)/2`, with all `c` of equal
//! parity. The trace-zero part uses the basis `b1 = −i+j+ij, b2 = i−j+ij,
//! b3 = i+j−ij`, and a group element `g` acts by `x ↦ g⁻¹xg`; its matrix
//! acts on coordinate row vectors from the right.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{frac, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzQuaternion {
    c: [i64; 4],
}

impl HurwitzQuaternion {
    /// Doubled coordinates; all four must share a parity.
    pub fn new(c: [i64; 4]) -> Result<Self> {
        let p = c[0].rem_euclid(2);
        if c.iter().any(|x| x.rem_euclid(2) != p) {
            return Err(Error::Parity(c));
        }
        Ok(HurwitzQuaternion { c })
    }

    /// `a + b i + c j + d ij`.
    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        HurwitzQuaternion {
            c: [2 * a, 2 * b, 2 * c, 2 * d],
        }
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_integers(0, 0, 1, 0)
    }

    pub fn ij() -> Self {
        Self::from_integers(0, 0, 0, 1)
    }

    /// `(1 + i + j + ij)/2`.
    pub fn w() -> Self {
        HurwitzQuaternion { c: [1, 1, 1, 1] }
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 4]
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.c;
        HurwitzQuaternion { c: [a, -b, -c, -d] }
    }

    pub fn norm(&self) -> i64 {
        self.c.iter().map(|x| x * x).sum::<i64>() / 4
    }

    pub fn trace(&self) -> i64 {
        self.c[0]
    }

    pub fn neg(&self) -> Self {
        HurwitzQuaternion {
            c: self.c.map(|x| -x),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = hamilton(self.c, other.c);
        debug_assert!(p.iter().all(|x| x % 2 == 0));
        HurwitzQuaternion {
            c: p.map(|x| x / 2),
        }
    }
}

impl fmt::Display for HurwitzQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.c;
        write!(f, "({a} + {b}i + {c}j + {d}ij)/2")
    }
}

/// Hamilton product of raw coordinate 4-vectors.
fn hamilton(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

pub fn quat_mul(a: &HurwitzQuaternion, b: &HurwitzQuaternion) -> HurwitzQuaternion {
    a.mul(b)
}

pub fn quat_conj(a: &HurwitzQuaternion) -> HurwitzQuaternion {
    a.conj()
}

pub fn quat_norm(a: &HurwitzQuaternion) -> i64 {
    a.norm()
}

pub fn quat_trace(a: &HurwitzQuaternion) -> i64 {
    a.trace()
}

/// b-basis coordinates of the pure quaternion `y1 i + y2 j + y3 ij`.
pub fn b_coords(y: [Rational; 3]) -> [Rational; 3] {
    let h = frac(1, 2);
    let [y1, y2, y3] = y;
    [
        (&y2 + &y3) * &h,
        (&y1 + &y3) * &h,
        (&y1 + &y2) * &h,
    ]
}

/// The pure quaternion `(y1, y2, y3)` with b-basis coordinates `x`.
pub fn from_b_coords(x: &[Rational; 3]) -> [Rational; 3] {
    let [x1, x2, x3] = x;
    [-x1 + x2 + x3, x1 - x2 + x3, x1 + x2 - x3]
}

/// Gram matrix of the norm form in the b-basis.
pub fn gram_q() -> [[Rational; 3]; 3] {
    let m = [[3, -1, -1], [-1, 3, -1], [-1, -1, 3]];
    m.map(|r| r.map(rat))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationFrame {
    /// Preserves `Q`; acts on X-frame polynomials.
    Q,
    /// Orthogonal; acts on Y-frame polynomials.
    Euclidean,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationMatrix {
    m: [[Rational; 3]; 3],
    frame: RotationFrame,
}

impl RotationMatrix {
    pub fn new(m: [[Rational; 3]; 3], frame: RotationFrame) -> Self {
        RotationMatrix { m, frame }
    }

    pub fn from_i64(m: [[i64; 3]; 3], frame: RotationFrame) -> Self {
        Self::new(m.map(|r| r.map(rat)), frame)
    }

    pub fn identity(frame: RotationFrame) -> Self {
        Self::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]], frame)
    }

    pub fn entries(&self) -> &[[Rational; 3]; 3] {
        &self.m
    }

    pub fn frame(&self) -> RotationFrame {
        self.frame
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.frame != other.frame {
            return Err(Error::Dimension("rotation matrices in different frames".into()));
        }
        Ok(Self::new(mat_mul(&self.m, &other.m), self.frame))
    }

    pub fn inverse(&self) -> Self {
        Self::new(mat_inv(&self.m), self.frame)
    }

    pub fn transpose(&self) -> Self {
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].clone())), self.frame)
    }

    pub fn det(&self) -> Rational {
        mat_det(&self.m)
    }

    pub fn trace(&self) -> Rational {
        &self.m[0][0] + &self.m[1][1] + &self.m[2][2]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.frame)
    }

    /// Multiplicative order (searched up to 12).
    pub fn order(&self) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=12 {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }

    /// Whether `det = 1` and the matrix preserves its frame's quadratic form.
    pub fn is_special_orthogonal(&self) -> bool {
        let form = match self.frame {
            RotationFrame::Q => gram_q(),
            RotationFrame::Euclidean => [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|r| r.map(rat)),
        };
        let t = self.transpose();
        self.det().is_one() && mat_mul(&mat_mul(&self.m, &form), &t.m) == form
    }

    /// `γ_Y g γ_Y⁻¹` with `γ_Y = (1/2)[[0,1,1],[1,0,1],[1,1,0]]`.
    pub fn to_euclidean(&self) -> Self {
        match self.frame {
            RotationFrame::Euclidean => self.clone(),
            RotationFrame::Q => Self::new(
                mat_mul(&mat_mul(&crate::poly::x_from_y(), &self.m), &crate::poly::y_from_x()),
                RotationFrame::Euclidean,
            ),
        }
    }

    pub fn to_q_frame(&self) -> Self {
        match self.frame {
            RotationFrame::Q => self.clone(),
            RotationFrame::Euclidean => Self::new(
                mat_mul(&mat_mul(&crate::poly::y_from_x(), &self.m), &crate::poly::x_from_y()),
                RotationFrame::Q,
            ),
        }
    }

    /// Row-vector product `v g`.
    pub fn apply_row(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|k| (0..3).map(|i| &v[i] * &self.m[i][k]).sum())
    }
}

impl fmt::Debug for RotationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "{:?}[{}]", self.frame, rows.join(", "))
    }
}

fn mat_mul(a: &[[Rational; 3]; 3], b: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

fn mat_det(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn mat_inv(m: &[[Rational; 3]; 3]) -> [[Rational; 3]; 3] {
    let d = mat_det(m);
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) / &d))
}

/// Matrix of `x ↦ q⁻¹ x q` on the b-basis, in the requested frame.
pub fn rho(q: &HurwitzQuaternion, frame: RotationFrame) -> Result<RotationMatrix> {
    if q.is_zero() {
        return Err(Error::ZeroQuaternion);
    }
    let c = q.doubled();
    let cbar = q.conj().doubled();
    let sq: i64 = c.iter().map(|x| x * x).sum();
    let basis = [[0, -1, 1, 1], [0, 1, -1, 1], [0, 1, 1, -1]];
    let rows = basis.map(|b| {
        // conj(q) b q / Nm(q) = (c̄ b c)/Σc² in raw coordinates.
        let p = hamilton(hamilton(cbar, b), c);
        debug_assert_eq!(p[0], 0);
        b_coords([frac(p[1], sq), frac(p[2], sq), frac(p[3], sq)])
    });
    let g = RotationMatrix::new(rows, RotationFrame::Q);
    Ok(match frame {
        RotationFrame::Q => g,
        RotationFrame::Euclidean => g.to_euclidean(),
    })
}

/// The 24 units of the order, in increasing doubled-coordinate order.
pub fn unit_group() -> Vec<HurwitzQuaternion> {
    norm_elements(1)
}

/// All order elements of norm `n`, in increasing doubled-coordinate order.
pub fn norm_elements(n: u64) -> Vec<HurwitzQuaternion> {
    let target = 4 * n as i64;
    let bound = isqrt(target as u64) as i64;
    let mut out = Vec::new();
    for c0 in -bound..=bound {
        let r0 = target - c0 * c0;
        for c1 in -bound..=bound {
            let r1 = r0 - c1 * c1;
            if r1 < 0 {
                continue;
            }
            for c2 in -bound..=bound {
                let r2 = r1 - c2 * c2;
                if r2 < 0 {
                    continue;
                }
                let s = isqrt(r2 as u64) as i64;
                if s * s != r2 {
                    continue;
                }
                let mut c3s = vec![-s, s];
                c3s.dedup();
                for c3 in c3s {
                    if let Ok(q) = HurwitzQuaternion::new([c0, c1, c2, c3]) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Generators `𝖎 = ρ(i)`, `𝖏 = ρ(j)`, `𝖜 = ρ(w)` in the Q frame.
pub fn generators() -> (RotationMatrix, RotationMatrix, RotationMatrix) {
    let r = |q: HurwitzQuaternion| rho(&q, RotationFrame::Q).expect("nonzero");
    (
        r(HurwitzQuaternion::i()),
        r(HurwitzQuaternion::j()),
        r(HurwitzQuaternion::w()),
    )
}

/// `γ1 = ρ(1+i)`.
pub fn gamma1() -> RotationMatrix {
    rho(&HurwitzQuaternion::from_integers(1, 1, 0, 0), RotationFrame::Q).expect("nonzero")
}

/// `γ2 = ρ(i−j)`.
pub fn gamma2() -> RotationMatrix {
    rho(&HurwitzQuaternion::from_integers(0, 1, -1, 0), RotationFrame::Q).expect("nonzero")
}

/// The unit group image Γ, listed as `1, 𝖜, 𝖜², 𝖎, 𝖎𝖜, 𝖎𝖜², 𝖏, 𝖏𝖜, 𝖏𝖜², 𝖎𝖏, 𝖎𝖏𝖜, 𝖎𝖏𝖜²`.
pub fn gamma_list() -> Vec<RotationMatrix> {
    let (i, j, w) = generators();
    let one = RotationMatrix::identity(RotationFrame::Q);
    let w2 = w.mul(&w).expect("same frame");
    let ij = i.mul(&j).expect("same frame");
    let mut out = Vec::with_capacity(12);
    for left in [&one, &i, &j, &ij] {
        for right in [&one, &w, &w2] {
            out.push(left.mul(right).expect("same frame"));
        }
    }
    out
}

/// `Γγ2`, in the order of [`gamma_list`].
pub fn gamma_gamma2_list() -> Vec<RotationMatrix> {
    let g2 = gamma2();
    gamma_list()
        .iter()
        .map(|g| g.mul(&g2).expect("same frame"))
        .collect()
}

/// Distinct rotation matrices of the norm-`n` elements.
pub fn norm_rotations(n: u64) -> Vec<RotationMatrix> {
    let set: BTreeSet<RotationMatrix> = norm_elements(n)
        .iter()
        .map(|q| rho(q, RotationFrame::Q).expect("nonzero"))
        .collect();
    set.into_iter().collect()
}

/// Left cosets `Γγ` partitioning `set`, each sorted, ordered by first element.
pub fn left_cosets(set: &[RotationMatrix]) -> Vec<Vec<RotationMatrix>> {
    partition(set, |g| {
        gamma_list()
            .iter()
            .map(|h| h.mul(g).expect("same frame"))
            .collect()
    })
}

/// Γ-conjugacy classes partitioning `set`, each sorted, ordered by first element.
pub fn conjugacy_classes(set: &[RotationMatrix]) -> Vec<Vec<RotationMatrix>> {
    partition(set, |g| {
        gamma_list()
            .iter()
            .map(|h| {
                h.mul(g)
                    .and_then(|x| x.mul(&h.inverse()))
                    .expect("same frame")
            })
            .collect()
    })
}

fn partition(
    set: &[RotationMatrix],
    orbit: impl Fn(&RotationMatrix) -> BTreeSet<RotationMatrix>,
) -> Vec<Vec<RotationMatrix>> {
    let mut remaining: BTreeSet<RotationMatrix> = set.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some(g) = remaining.iter().next().cloned() {
        let class: Vec<RotationMatrix> = orbit(&g)
            .into_iter()
            .filter(|x| remaining.contains(x))
            .collect();
        for x in &class {
            remaining.remove(x);
        }
        out.push(class);
    }
    out
}

/// One representative per left Γ-coset of the norm-`p` rotations: the
/// lexicographically least matrix (row-major) in each coset.
pub fn hecke_coset_reps(p: u64) -> Result<Vec<RotationMatrix>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(left_cosets(&norm_rotations(p))
        .into_iter()
        .map(|c| c.into_iter().next().expect("nonempty coset"))
        .collect())
}

/// Whether the row vector `v` has integer entries.
pub fn is_lattice_vector(v: &[Rational; 3]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
