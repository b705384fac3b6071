//! Brute-force lattice-path reference sums.
//!
//! Enumerates partial Motzkin paths explicitly and multiplies step weights,
//! with the usual conventions: rises weighted `a_i` (height measured at the
//! start of the step), falls from height `i` weighted `b_i`, level steps at
//! height `i` weighted `c_i`.  This is the independent route against which
//! the triangular recurrences of this module are checked; it never calls
//! them.

use crate::polyring::MultiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Rise,
    Level,
    Fall,
}

/// Weighted sum over all partial Motzkin paths from `(0,0)` to `(n,k)`.
///
/// `rise[i]` weights a rise starting at height `i`, `fall[i]` a fall from
/// height `i` (1-based: `fall[i]` is consulted for a step ending at `i-1`),
/// `level[i]` a level step at height `i`.  Pass `None` for unweighted rises.
pub fn motzkin_path_sum(
    rise: Option<&[MultiPoly]>,
    fall: &[MultiPoly],
    level: Option<&[MultiPoly]>,
    n: usize,
    k: usize,
) -> MultiPoly {
    let reg = fall
        .first()
        .map(|p| p.registry().clone())
        .or_else(|| rise.and_then(|r| r.first().map(|p| p.registry().clone())))
        .or_else(|| level.and_then(|l| l.first().map(|p| p.registry().clone())))
        .expect("at least one weight");
    let mut total = MultiPoly::zero(&reg);
    let mut path: Vec<Step> = Vec::with_capacity(n);
    enumerate(
        &mut path,
        0,
        n,
        k,
        level.is_some(),
        &mut |steps: &[Step]| {
            let mut w = MultiPoly::one(&reg);
            let mut h = 0usize;
            for s in steps {
                match s {
                    Step::Rise => {
                        if let Some(r) = rise {
                            w = &w * &r[h];
                        }
                        h += 1;
                    }
                    Step::Level => {
                        let l = level.expect("level steps disabled");
                        w = &w * &l[h];
                    }
                    Step::Fall => {
                        w = &w * &fall[h - 1]; // fall from height h weighted fall[h-1] = b_h
                        h -= 1;
                    }
                }
            }
            total = &total + &w;
        },
    );
    total
}

/// Weighted sum over Dyck paths from `(0,0)` to `(2n,2k)`: Motzkin paths
/// without level steps.
pub fn dyck_path_sum(fall: &[MultiPoly], n: usize, k: usize) -> MultiPoly {
    motzkin_path_sum(None, fall, None, 2 * n, 2 * k)
}

fn enumerate(
    path: &mut Vec<Step>,
    height: usize,
    remaining: usize,
    target: usize,
    allow_level: bool,
    visit: &mut impl FnMut(&[Step]),
) {
    if remaining == 0 {
        if height == target {
            visit(path);
        }
        return;
    }
    // Reachability pruning keeps this linear in the number of paths.
    let max_reach = height + remaining;
    let min_reach = height.saturating_sub(remaining);
    if target > max_reach || target < min_reach {
        return;
    }
    path.push(Step::Rise);
    enumerate(path, height + 1, remaining - 1, target, allow_level, visit);
    path.pop();
    if allow_level {
        path.push(Step::Level);
        enumerate(path, height, remaining - 1, target, allow_level, visit);
        path.pop();
    }
    if height > 0 {
        path.push(Step::Fall);
        enumerate(path, height - 1, remaining - 1, target, allow_level, visit);
        path.pop();
    }
}
