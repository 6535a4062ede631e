//! Small named instances used throughout the tests and the CLI.

use num::bigint::BigInt;
use num::rational::Ratio;

use crate::carrier::Carrier;
use crate::grel::GRel;
use crate::xreal::{ExtReal, Rational};
use crate::Error;

fn grid_points(n: usize) -> (Carrier, Vec<Rational>) {
    assert!(n >= 2, "grid needs at least two points");
    let denom = BigInt::from((n - 1) as u64);
    let points: Vec<Rational> = (0..n)
        .map(|k| Ratio::new(BigInt::from(k as u64), denom.clone()))
        .collect();
    let labels: Vec<String> = points
        .iter()
        .map(|p| ExtReal::from_rational(p.clone()).unwrap().to_string())
        .collect();
    (Carrier::new(labels).unwrap(), points)
}

/// `n` evenly spaced points of `[0,1]` with the distance `d(x,y) = x(1-y)`.
pub fn g_grid(n: usize) -> GRel {
    let (carrier, pts) = grid_points(n);
    let one = Rational::from_integer(BigInt::from(1));
    GRel::from_fn(carrier.clone(), carrier, |i, j| {
        ExtReal::from_rational(&pts[i] * (&one - &pts[j])).unwrap()
    })
}

/// `n` evenly spaced points of `[0,1]` with the quasimetric `q(x,y) = (x-y)₊`.
pub fn q_grid(n: usize) -> GRel {
    let (carrier, pts) = grid_points(n);
    GRel::from_fn(carrier.clone(), carrier, |i, j| {
        if pts[i] <= pts[j] {
            ExtReal::zero()
        } else {
            ExtReal::from_rational(&pts[i] - &pts[j]).unwrap()
        }
    })
}

fn numbered_carrier(n: usize) -> Carrier {
    Carrier::new((0..n).map(|i| i.to_string())).unwrap()
}

/// The characteristic table of `≤` on an `n`-chain.
pub fn chain(n: usize) -> GRel {
    let c = numbered_carrier(n);
    GRel::characteristic(c.clone(), c, |i, j| i <= j)
}

/// The characteristic table of `<` on an `n`-chain.
pub fn strict_chain(n: usize) -> GRel {
    let c = numbered_carrier(n);
    GRel::characteristic(c.clone(), c, |i, j| i < j)
}

/// Three points `a, b, c` where the `a`-row is constantly `1` and the other
/// rows vanish. A non-reflexive distance that is max-continuous (with
/// `a` a maximum of `{b,c}`) but not a predomain.
pub fn x3nr() -> GRel {
    let c = Carrier::new(["a", "b", "c"]).unwrap();
    GRel::from_fn(c.clone(), c, |i, _| {
        if i == 0 {
            ExtReal::from_int(1)
        } else {
            ExtReal::zero()
        }
    })
}

/// The discrete metric on `n` points (`0` on the diagonal, `1` elsewhere).
pub fn discrete_metric(n: usize) -> GRel {
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let c = Carrier::new(labels).unwrap();
    GRel::from_fn(c.clone(), c, |i, j| {
        if i == j {
            ExtReal::zero()
        } else {
            ExtReal::from_int(1)
        }
    })
}

/// Looks up a gallery instance by name: `G<n>`, `Q<n>`, `CHAIN<n>`,
/// `STRICT<n>`, `METRIC<n>` or `X3NR`.
pub fn by_name(name: &str) -> Result<GRel, Error> {
    let upper = name.to_ascii_uppercase();
    if upper == "X3NR" {
        return Ok(x3nr());
    }
    let parse_size = |prefix: &str| -> Option<usize> {
        upper.strip_prefix(prefix).and_then(|rest| rest.parse().ok())
    };
    if let Some(n) = parse_size("CHAIN") {
        return Ok(chain(n));
    }
    if let Some(n) = parse_size("STRICT") {
        return Ok(strict_chain(n));
    }
    if let Some(n) = parse_size("METRIC") {
        return Ok(discrete_metric(n));
    }
    if let Some(n) = parse_size("G") {
        if n >= 2 {
            return Ok(g_grid(n));
        }
    }
    if let Some(n) = parse_size("Q") {
        if n >= 2 {
            return Ok(q_grid(n));
        }
    }
    Err(Error::UnknownGallery(name.to_string()))
}

pub const GALLERY_NAMES: &[&str] = &["G3", "G5", "G11", "Q3", "Q5", "CHAIN3", "STRICT3", "X3NR", "METRIC2"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g3_table_values() {
        let g3 = g_grid(3);
        assert_eq!(g3.source().labels(), &["0", "1/2", "1"]);
        assert_eq!(*g3.at_labels("1/2", "0").unwrap(), ExtReal::ratio(1, 2));
        assert_eq!(*g3.at_labels("1/2", "1/2").unwrap(), ExtReal::ratio(1, 4));
        assert_eq!(*g3.at_labels("1", "0").unwrap(), ExtReal::from_int(1));
        assert_eq!(*g3.at_labels("0", "1").unwrap(), ExtReal::zero());
    }

    #[test]
    fn q3_is_truncated_difference() {
        let q3 = q_grid(3);
        assert_eq!(*q3.at_labels("1", "1/2").unwrap(), ExtReal::ratio(1, 2));
        assert_eq!(*q3.at_labels("1/2", "1").unwrap(), ExtReal::zero());
        assert!(q3.has_zero_diagonal());
    }

    #[test]
    fn lookup_by_name() {
        assert!(by_name("G3").is_ok());
        assert!(by_name("q5").is_ok());
        assert!(by_name("chain4").is_ok());
        assert!(by_name("X3NR").is_ok());
        assert!(by_name("METRIC2").is_ok());
        assert!(by_name("bogus").is_err());
    }
}
