// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Downhill simplex (Nelder–Mead) minimization in a fixed number of dimensions.

#[derive(Clone, Copy, Debug)]
pub struct SimplexOptions<const D: usize> {
    /// Edge lengths of the initial simplex along each axis.
    pub initial_step: [f64; D],
    /// Stop when `f(worst) − f(best)` drops below this.
    pub spread_tolerance: f64,
    pub max_iterations: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct SimplexResult<const D: usize> {
    pub x: [f64; D],
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

fn along<const D: usize>(from: &[f64; D], to: &[f64; D], t: f64) -> [f64; D] {
    std::array::from_fn(|k| from[k] + t * (to[k] - from[k]))
}

pub fn minimize<const D: usize>(
    mut f: impl FnMut(&[f64; D]) -> f64,
    start: [f64; D],
    options: &SimplexOptions<D>,
) -> SimplexResult<D> {
    // D + 1 vertices; Vec because `[_; D + 1]` is not expressible yet.
    let mut vertices: Vec<([f64; D], f64)> = Vec::with_capacity(D + 1);
    vertices.push((start, f(&start)));
    for k in 0..D {
        let mut x = start;
        x[k] += options.initial_step[k];
        vertices.push((x, f(&x)));
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < options.max_iterations {
        vertices.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = vertices[0].1;
        let worst = vertices[D].1;
        if worst - best < options.spread_tolerance {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid: [f64; D] =
            std::array::from_fn(|k| vertices[..D].iter().map(|(x, _)| x[k]).sum::<f64>() / D as f64);
        let worst_x = vertices[D].0;
        let second_worst = vertices[D - 1].1;

        let reflected = along(&centroid, &worst_x, -REFLECT);
        let f_reflected = f(&reflected);

        if f_reflected < best {
            let expanded = along(&centroid, &reflected, EXPAND);
            let f_expanded = f(&expanded);
            vertices[D] = if f_expanded < f_reflected { (expanded, f_expanded) } else { (reflected, f_reflected) };
            continue;
        }
        if f_reflected < second_worst {
            vertices[D] = (reflected, f_reflected);
            continue;
        }

        let (contracted, limit) = if f_reflected < worst {
            (along(&centroid, &reflected, CONTRACT), f_reflected)
        } else {
            (along(&centroid, &worst_x, CONTRACT), worst)
        };
        let f_contracted = f(&contracted);
        if f_contracted < limit {
            vertices[D] = (contracted, f_contracted);
            continue;
        }

        let anchor = vertices[0].0;
        for vertex in vertices.iter_mut().skip(1) {
            let x = along(&anchor, &vertex.0, SHRINK);
            *vertex = (x, f(&x));
        }
    }

    vertices.sort_by(|a, b| a.1.total_cmp(&b.1));
    SimplexResult { x: vertices[0].0, value: vertices[0].1, iterations, converged }
}
