//! Laplacian spectral radius `μ = λ_max(D − A)`.
//!
//! Small graphs use a dense symmetric eigensolve; larger ones use power iteration on
//! `L`, which is positive semidefinite so its dominant eigenvalue is `μ`. Either way
//! the reported tolerance comes from the residual of the returned eigenvector: for a
//! symmetric matrix, `‖Lw − μw‖/‖w‖` bounds the distance from `μ` to the spectrum.

use nalgebra::{DMatrix, RealField, SymmetricEigen};
use num_traits::Float;

use crate::graph::Graph;

/// Scalars usable for spectral work: `f32` and `f64`.
pub trait Scalar: Float + RealField + Copy {}

impl<T: Float + RealField + Copy> Scalar for T {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralMethod {
    /// Dense eigensolve up to `dense_max_n` vertices, power iteration beyond.
    Auto,
    Dense,
    Power,
}

#[derive(Clone, Copy, Debug)]
pub struct SpectralOptions<F> {
    pub tolerance: F,
    pub max_iterations: usize,
    pub dense_max_n: usize,
    pub method: SpectralMethod,
}

impl<F: Scalar> Default for SpectralOptions<F> {
    fn default() -> Self {
        let requested = <F as num_traits::NumCast>::from(1e-9).expect("representable");
        let floor = <F as Float>::epsilon()
            * <F as num_traits::NumCast>::from(100.0).expect("representable");
        SpectralOptions {
            tolerance: Float::max(requested, floor),
            max_iterations: 100_000,
            dense_max_n: 64,
            method: SpectralMethod::Auto,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult<F> {
    pub mu: F,
    /// Certified absolute error of `mu`.
    pub tolerance: F,
    /// Unit-norm eigenvector estimate.
    pub eigenvector: Vec<F>,
    pub method: SpectralMethod,
    pub iterations: usize,
}

impl<F: Scalar> SpectralResult<F> {
    /// Upper end of the certified interval.
    pub fn upper(&self) -> F {
        self.mu + self.tolerance
    }

    pub fn lower(&self) -> F {
        self.mu - self.tolerance
    }
}

fn cast<F: Scalar>(x: usize) -> F {
    <F as num_traits::NumCast>::from(x).expect("vertex counts fit in any float")
}

/// `y = L x`.
fn laplacian_apply<F: Scalar>(g: &Graph, adj: &[Vec<usize>], x: &[F], y: &mut [F]) {
    for v in 0..g.n() {
        let mut acc = cast::<F>(adj[v].len()) * x[v];
        for &u in &adj[v] {
            acc -= x[u];
        }
        y[v] = acc;
    }
}

fn norm<F: Scalar>(x: &[F]) -> F {
    Float::sqrt(x.iter().fold(F::zero(), |acc, &v| acc + v * v))
}

fn residual<F: Scalar>(g: &Graph, adj: &[Vec<usize>], w: &[F], mu: F) -> F {
    let mut lw = vec![F::zero(); w.len()];
    laplacian_apply(g, adj, w, &mut lw);
    let r: Vec<F> = lw.iter().zip(w).map(|(&a, &b)| a - mu * b).collect();
    norm(&r) / norm(w)
}

/// Spectral radius with default options.
pub fn laplacian_spectral_radius<F: Scalar>(g: &Graph) -> SpectralResult<F> {
    laplacian_spectral_radius_with(g, &SpectralOptions::default())
}

pub fn laplacian_spectral_radius_with<F: Scalar>(
    g: &Graph,
    opts: &SpectralOptions<F>,
) -> SpectralResult<F> {
    let n = g.n();
    if g.m() == 0 {
        let mut e = vec![F::zero(); n];
        if let Some(first) = e.first_mut() {
            *first = F::one();
        }
        return SpectralResult {
            mu: F::zero(),
            tolerance: F::zero(),
            eigenvector: e,
            method: SpectralMethod::Dense,
            iterations: 0,
        };
    }
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let dense = match opts.method {
        SpectralMethod::Dense => true,
        SpectralMethod::Power => false,
        SpectralMethod::Auto => n <= opts.dense_max_n,
    };
    if dense {
        dense_radius(g, &adj)
    } else {
        power_radius(g, &adj, opts)
    }
}

fn dense_radius<F: Scalar>(g: &Graph, adj: &[Vec<usize>]) -> SpectralResult<F> {
    let n = g.n();
    let mut lap = DMatrix::<F>::zeros(n, n);
    for v in 0..n {
        lap[(v, v)] = cast(adj[v].len());
        for &u in &adj[v] {
            lap[(v, u)] = -F::one();
        }
    }
    let eig = SymmetricEigen::new(lap);
    let (idx, mu) = eig.eigenvalues.iter().copied().enumerate().fold(
        (0, Float::neg_infinity()),
        |best, (i, x)| if x > best.1 { (i, x) } else { best },
    );
    let w: Vec<F> = eig.eigenvectors.column(idx).iter().copied().collect();
    // Eigenvalues of the dense solve are themselves accurate to O(eps·‖L‖).
    let solve_err = <F as Float>::epsilon() * cast::<F>(2 * g.max_degree() + 1) * cast::<F>(n);
    SpectralResult {
        tolerance: residual(g, adj, &w, mu) + solve_err,
        mu,
        eigenvector: w,
        method: SpectralMethod::Dense,
        iterations: 0,
    }
}

fn power_radius<F: Scalar>(
    g: &Graph,
    adj: &[Vec<usize>],
    opts: &SpectralOptions<F>,
) -> SpectralResult<F> {
    let n = g.n();
    // Degree vector plus a bump on vertex 0: never orthogonal to the dominant
    // eigenvector, even on regular graphs where the degree vector spans ker L.
    let mut w: Vec<F> = adj.iter().map(|a| cast::<F>(a.len())).collect();
    w[0] += F::one();
    let scale = norm(&w);
    w.iter_mut().for_each(|x| *x /= scale);

    let mut lw = vec![F::zero(); n];
    let mut iterations = 0;
    loop {
        iterations += 1;
        laplacian_apply(g, adj, &w, &mut lw);
        let mu = w
            .iter()
            .zip(&lw)
            .fold(F::zero(), |acc, (&a, &b)| acc + a * b);
        let r: Vec<F> = lw.iter().zip(&w).map(|(&a, &b)| a - mu * b).collect();
        let res = norm(&r);
        let len = norm(&lw);
        if res <= opts.tolerance || iterations >= opts.max_iterations || len == F::zero() {
            return SpectralResult {
                mu,
                tolerance: res,
                eigenvector: w,
                method: SpectralMethod::Power,
                iterations,
            };
        }
        for (x, &y) in w.iter_mut().zip(&lw) {
            *x = y / len;
        }
    }
}
