//! Dense structure over an exact field; the engine behind Reeb vectors,
//! kernel decompositions and left-symmetric products.

use crate::error::{Error, Result};
use crate::exterior::{OneForm, TwoForm};
use crate::lie::LieAlgebra;
use crate::scalars::linalg::{self, Matrix};
use crate::scalars::Field;

#[derive(Clone, Debug)]
pub(crate) struct Dense<F> {
    pub n: usize,
    /// `c[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`.
    pub c: Vec<Vec<Vec<F>>>,
    pub alpha: Vec<F>,
    /// `w[i][j] = ω(e_i, e_j)`.
    pub w: Matrix<F>,
}

pub(crate) fn convert<F: Field>(v: &[crate::Scalar]) -> Result<Vec<F>> {
    v.iter()
        .map(|s| {
            F::from_scalar(s)
                .ok_or_else(|| Error::ParametricUnsupported(crate::lie::join_names(&s.variables())))
        })
        .collect()
}

pub(crate) fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub(crate) fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn scale<F: Field>(k: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| k.clone() * x.clone()).collect()
}

pub(crate) fn is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub(crate) fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Bilinear evaluation of a 2-form matrix.
pub(crate) fn form2<F: Field>(w: &Matrix<F>, x: &[F], y: &[F]) -> F {
    let mut acc = F::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() && !w[i][j].is_zero() {
                acc = acc + xi.clone() * yj.clone() * w[i][j].clone();
            }
        }
    }
    acc
}

/// Bilinear evaluation of structure constants.
pub(crate) fn bracket<F: Field>(c: &[Vec<Vec<F>>], x: &[F], y: &[F]) -> Vec<F> {
    let n = x.len();
    let mut out = vec![F::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() || i == j {
                continue;
            }
            let k = x[i].clone() * y[j].clone();
            for (o, cij) in out.iter_mut().zip(&c[i][j]) {
                if !cij.is_zero() {
                    *o = o.clone() + k.clone() * cij.clone();
                }
            }
        }
    }
    out
}

/// Products `p[i][j] = e_i ∘ e_j` of a bilinear multiplication.
pub(crate) type Products<F> = Vec<Vec<Vec<F>>>;

pub(crate) fn multiply<F: Field>(p: &Products<F>, x: &[F], y: &[F]) -> Vec<F> {
    let dim = p.first().and_then(|r| r.first()).map_or(0, Vec::len);
    let mut out = vec![F::zero(); dim];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let k = xi.clone() * yj.clone();
            for (o, c) in out.iter_mut().zip(&p[i][j]) {
                if !c.is_zero() {
                    *o = o.clone() + k.clone() * c.clone();
                }
            }
        }
    }
    out
}

/// Solves `ω(x*y, z) = −ω(y, [x, z])` for every basis pair.
pub(crate) fn symplectic_products<F: Field>(c: &[Vec<Vec<F>>], w: &Matrix<F>) -> Result<Products<F>> {
    let n = w.len();
    let wt_inv = linalg::inverse(&linalg::transpose(w)).ok_or(Error::DegenerateOmega)?;
    let mut p = vec![vec![vec![F::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let ea = unit::<F>(n, a);
            let eb = unit::<F>(n, b);
            let r: Vec<F> = (0..n)
                .map(|z| -form2(w, &eb, &bracket(c, &ea, &unit(n, z))))
                .collect();
            p[a][b] = linalg::mat_vec(&wt_inv, &r);
        }
    }
    Ok(p)
}

/// The adapted basis `(h-basis, ξ)` and everything expressed in it.
#[derive(Clone, Debug)]
pub(crate) struct Adapted<F> {
    /// Columns are the new basis vectors in old coordinates.
    pub basis: Matrix<F>,
    pub basis_inv: Matrix<F>,
    pub xi: Vec<F>,
    /// Structure constants of `h = ker α` (dimension `n − 1`).
    pub hc: Vec<Vec<Vec<F>>>,
    /// `ω|h`.
    pub hw: Matrix<F>,
    /// `ad_ξ|h`, row-major.
    pub d: Matrix<F>,
}

impl<F: Field> Dense<F> {
    pub fn new(l: &LieAlgebra, alpha: &OneForm, omega: &TwoForm) -> Result<Self> {
        let n = l.dim();
        for found in [alpha.dim(), omega.dim()] {
            if found != n {
                return Err(Error::DimensionMismatch { expected: n, found });
            }
        }
        Ok(Dense {
            n,
            c: l.dense()?,
            alpha: convert(alpha.coeffs())?,
            w: omega
                .matrix()
                .iter()
                .map(|r| convert(r))
                .collect::<Result<_>>()?,
        })
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        bracket(&self.c, x, y)
    }

    pub fn omega(&self, x: &[F], y: &[F]) -> F {
        form2(&self.w, x, y)
    }

    /// `P[z][x] = Φ(e_x)(e_z) = ω(e_x, e_z) + α(e_x) α(e_z)`.
    pub fn phi(&self) -> Matrix<F> {
        (0..self.n)
            .map(|z| {
                (0..self.n)
                    .map(|x| {
                        self.w[x][z].clone() + self.alpha[x].clone() * self.alpha[z].clone()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn reeb(&self) -> Result<Vec<F>> {
        linalg::solve(&self.phi(), &self.alpha).ok_or(Error::SingularPhi)
    }

    /// Left-symmetric products from `Φ(x.y)(z) = −Φ(y)([x,z])`.
    pub fn products_via_phi(&self) -> Result<Products<F>> {
        let n = self.n;
        let p = self.phi();
        let pinv = linalg::inverse(&p).ok_or(Error::SingularPhi)?;
        let mut out = vec![vec![vec![F::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let rhs: Vec<F> = (0..n)
                    .map(|z| {
                        let xz = self.bracket(&unit(n, i), &unit(n, z));
                        // Φ(e_j)(u) = Σ_w u_w P[w][j]
                        -xz.iter()
                            .enumerate()
                            .fold(F::zero(), |acc, (wi, u)| acc + u.clone() * p[wi][j].clone())
                    })
                    .collect();
                out[i][j] = linalg::mat_vec(&pinv, &rhs);
            }
        }
        Ok(out)
    }

    /// Adapted basis: pivot on the first nonzero coefficient of `α`, span
    /// `ker α` by `e_j − (α_j/α_p) e_p` for `j ≠ p`, and append `ξ`.
    pub fn adapted(&self) -> Result<Adapted<F>> {
        let n = self.n;
        let xi = self.reeb()?;
        let p = self
            .alpha
            .iter()
            .position(|a| !a.is_zero())
            .ok_or(Error::SingularPhi)?;
        let mut cols: Vec<Vec<F>> = Vec::with_capacity(n);
        for j in (0..n).filter(|&j| j != p) {
            let mut v = unit::<F>(n, j);
            v[p] = -(self.alpha[j].clone() / self.alpha[p].clone());
            cols.push(v);
        }
        cols.push(xi.clone());
        let basis = linalg::transpose(&cols);
        let basis_inv = linalg::inverse(&basis).ok_or(Error::SingularPhi)?;
        let m = n - 1;
        let new_bracket = |a: usize, b: usize| -> Vec<F> {
            linalg::mat_vec(&basis_inv, &self.bracket(&cols[a], &cols[b]))
        };
        let mut hc = vec![vec![vec![F::zero(); m]; m]; m];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    let v = new_bracket(a, b);
                    hc[a][b] = v[..m].to_vec();
                }
            }
        }
        let hw = (0..m)
            .map(|a| (0..m).map(|b| self.omega(&cols[a], &cols[b])).collect())
            .collect();
        let dcols: Vec<Vec<F>> = (0..m).map(|b| new_bracket(m, b)[..m].to_vec()).collect();
        let d = linalg::transpose(&dcols);
        Ok(Adapted {
            basis,
            basis_inv,
            xi,
            hc,
            hw,
            d,
        })
    }

    /// Left-symmetric products assembled from the kernel data:
    /// `x.y = x*y + ω(x, ad_ξ y) ξ`, `ξ.x = ad_ξ x`, `x.ξ = 0`.
    pub fn products_via_kernel(&self) -> Result<Products<F>> {
        let n = self.n;
        let m = n - 1;
        let ad = self.adapted()?;
        let star = symplectic_products(&ad.hc, &ad.hw)?;
        // products of adapted basis vectors, in adapted coordinates
        let mut q = vec![vec![vec![F::zero(); n]; n]; n];
        for a in 0..m {
            for b in 0..m {
                let mut v = star[a][b].clone();
                let dy: Vec<F> = (0..m).map(|k| ad.d[k][b].clone()).collect();
                v.push(form2(&ad.hw, &unit(m, a), &dy));
                q[a][b] = v;
            }
        }
        for b in 0..m {
            let mut v: Vec<F> = (0..m).map(|k| ad.d[k][b].clone()).collect();
            v.push(F::zero());
            q[m][b] = v;
        }
        // back to the original basis
        let mut out = vec![vec![vec![F::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let xi: Vec<F> = (0..n).map(|a| ad.basis_inv[a][i].clone()).collect();
                let yj: Vec<F> = (0..n).map(|b| ad.basis_inv[b][j].clone()).collect();
                let v = multiply(&q, &xi, &yj);
                out[i][j] = linalg::mat_vec(&ad.basis, &v);
            }
        }
        Ok(out)
    }
}
