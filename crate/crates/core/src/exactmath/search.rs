//! Deterministic enumeration of small integer points.

use super::scalar::{int, Rational};

/// Unit vectors first, then the integer points of max-norm `R = 1, 2, ...`
/// in lexicographic order with coordinate values ranked `0, 1, -1, 2, -2, ...`.
/// The zero vector is never produced and at most `cap` points are yielded.
pub fn small_integer_points(n: usize, cap: usize) -> impl Iterator<Item = Vec<Rational>> {
    let units = (0..n).map(move |k| (0..n).map(|i| i64::from(i == k)).collect::<Vec<i64>>());
    let boxes = (1..).flat_map(move |radius: i64| {
        let values: Vec<i64> = std::iter::once(0)
            .chain((1..=radius).flat_map(|v| [v, -v]))
            .collect();
        Odometer::new(n, values).filter(move |p| {
            let max = p.iter().map(|v| v.abs()).max().unwrap_or(0);
            let nonzero = p.iter().filter(|v| **v != 0).count();
            max == radius && !(nonzero == 1 && max == 1 && p.iter().all(|v| *v >= 0))
        })
    });
    units
        .chain(boxes)
        .take(if n == 0 { 0 } else { cap })
        .map(|p| p.into_iter().map(int).collect())
}

struct Odometer {
    values: Vec<i64>,
    idx: Vec<usize>,
    done: bool,
}

impl Odometer {
    fn new(n: usize, values: Vec<i64>) -> Self {
        Self {
            values,
            idx: vec![0; n],
            done: n == 0,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.values[i]).collect();
        // last coordinate varies fastest
        let mut k = self.idx.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.idx[k] += 1;
            if self.idx[k] < self.values.len() {
                break;
            }
            self.idx[k] = 0;
        }
        Some(out)
    }
}
