use nalgebra::{DMatrix, SymmetricEigen};

use super::{balanced, bfs_separator, shrink, validate_separator, SeparatorResult};
use crate::graph::{connected_components, induced_subgraph, Graph};
use crate::rng::SplitMix64;

const RESIDUAL_TOL: f64 = 1e-8;
const KRYLOV_DIM: usize = 32;

/// Spectral bisection turned into a vertex separator.
///
/// Sorts the largest component by its Fiedler vector, takes the balanced
/// prefix cut with the fewest cut edges, and puts the smaller-side endpoint of
/// every cut edge into `S`, which is then shrunk greedily. Falls back to
/// [`bfs_separator`] (and from there to the trivial separator) if the cut does
/// not yield a valid separator.
pub fn spectral_separator(g: &Graph) -> SeparatorResult {
    let n = g.n();
    if let Some(sep) = validate_separator(g, &[]) {
        return sep;
    }
    let comps = connected_components(g);
    let comp = comps.iter().fold(
        &comps[0],
        |best, c| if c.len() > best.len() { c } else { best },
    );
    let h = comp.len();

    let values = fiedler_vector(g, comp);
    let mut order: Vec<usize> = (0..h).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(comp[a].cmp(&comp[b])));
    let order: Vec<usize> = order.into_iter().map(|i| comp[i]).collect();

    let mut in_prefix = vec![false; n];
    let mut cut = 0isize;
    let mut best: Option<(isize, usize)> = None;
    for (k, &v) in order.iter().enumerate().take(h - 1) {
        in_prefix[v] = true;
        for &w in g.neighbors(v) {
            cut += if in_prefix[w] { -1 } else { 1 };
        }
        let left = k + 1;
        if balanced(left, n) && balanced(h - left, n) && best.is_none_or(|(c, _)| cut < c) {
            best = Some((cut, left));
        }
    }

    if let Some((_, k)) = best {
        let (prefix, suffix) = order.split_at(k);
        let small = if prefix.len() <= suffix.len() {
            prefix
        } else {
            suffix
        };
        let mut in_small = vec![false; n];
        for &v in small {
            in_small[v] = true;
        }
        let mut s: Vec<usize> = small
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().any(|&w| !in_small[w]))
            .collect();
        s.sort_unstable();
        if let Some(sep) = validate_separator(g, &s) {
            return shrink(g, sep);
        }
    }
    bfs_separator(g)
}

/// Approximate Fiedler vector of the subgraph induced by `vertices` (assumed
/// connected), indexed like `vertices`.
///
/// Restarted Lanczos with full reorthogonalisation on the Laplacian,
/// deflating the constant vector. Stops once the eigen-residual
/// `||L y - theta y||` drops below 1e-8 or after `10 * h^2` matrix-vector
/// products, returning the best iterate seen.
pub fn fiedler_vector(g: &Graph, vertices: &[usize]) -> Vec<f64> {
    let (sub, _) = induced_subgraph(g, vertices).expect("vertices in range");
    let h = sub.n();
    match h {
        0 => return Vec::new(),
        1 => return vec![0.0],
        2 => {
            return vec![
                -std::f64::consts::FRAC_1_SQRT_2,
                std::f64::consts::FRAC_1_SQRT_2,
            ]
        }
        _ => {}
    }
    let laplacian = |x: &[f64], out: &mut [f64]| {
        for v in 0..h {
            let nb = sub.neighbors(v);
            out[v] = nb.len() as f64 * x[v] - nb.iter().map(|&w| x[w]).sum::<f64>();
        }
    };

    let mut rng = SplitMix64::new(0x5eed_f1ed);
    let mut start: Vec<f64> = (0..h).map(|_| rng.next_f64() - 0.5).collect();
    deflate(&mut start);
    normalize(&mut start);

    let budget = 10 * h * h;
    let mut matvecs = 0;
    let mut best = (f64::INFINITY, start.clone());
    let mut scratch = vec![0.0; h];
    let krylov = KRYLOV_DIM.min(h - 1);

    while matvecs < budget {
        let mut basis: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha = Vec::with_capacity(krylov);
        let mut beta: Vec<f64> = Vec::with_capacity(krylov);
        for j in 0..krylov {
            let mut w = vec![0.0; h];
            laplacian(&basis[j], &mut w);
            matvecs += 1;
            alpha.push(dot(&basis[j], &w));
            for _ in 0..2 {
                deflate(&mut w);
                for q in &basis {
                    let c = dot(q, &w);
                    axpy(-c, q, &mut w);
                }
            }
            let norm = dot(&w, &w).sqrt();
            if j + 1 == krylov || norm < 1e-12 {
                break;
            }
            beta.push(norm);
            w.iter_mut().for_each(|x| *x /= norm);
            basis.push(w);
        }

        let k = alpha.len();
        let mut t = DMatrix::<f64>::zeros(k, k);
        for i in 0..k {
            t[(i, i)] = alpha[i];
            if i + 1 < k {
                t[(i, i + 1)] = beta[i];
                t[(i + 1, i)] = beta[i];
            }
        }
        let eig = SymmetricEigen::new(t);
        let idx = (0..k)
            .min_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
            .expect("k >= 1");
        let theta = eig.eigenvalues[idx];
        let mut y = vec![0.0; h];
        for (i, q) in basis.iter().take(k).enumerate() {
            axpy(eig.eigenvectors[(i, idx)], q, &mut y);
        }
        deflate(&mut y);
        normalize(&mut y);

        laplacian(&y, &mut scratch);
        matvecs += 1;
        let residual = scratch
            .iter()
            .zip(&y)
            .map(|(ly, yy)| (ly - theta * yy).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual < best.0 {
            best = (residual, y.clone());
        }
        if residual < RESIDUAL_TOL {
            break;
        }
        start = y;
    }

    let mut y = best.1;
    if let Some(first) = y.iter().find(|x| x.abs() > 1e-9) {
        if *first < 0.0 {
            y.iter_mut().for_each(|x| *x = -*x);
        }
    }
    y
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(c: f64, x: &[f64], y: &mut [f64]) {
    y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += c * xi);
}

fn deflate(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|v| *v -= mean);
}

fn normalize(x: &mut [f64]) {
    let norm = dot(x, x).sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}
