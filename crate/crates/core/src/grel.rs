//! Generalized relations: total value tables `X × Y → [0, ∞]`.
//!
//! Classical relations embed as their characteristic tables (`0` on related
//! pairs, `∞` elsewhere). Composition is min-plus, the lattice operations
//! are pointwise, and the two Kan extensions `d/e` and `e\d` are exact
//! suprema of truncated differences. The uniform preorder `≾` between unary
//! functions reduces, on a finite carrier, to inclusion of zero-sets:
//! below the least positive value of `g` the sublevel sets `{x : g(x) ≤ r}`
//! stabilize at the zero-set, so `lim_{r→0} sup_{g(x)≤r} f(x) = 0` holds
//! exactly when every zero of `g` is a zero of `f`.

use std::fmt;

use crate::carrier::{Carrier, Subset};
use crate::xreal::ExtReal;
use crate::Error;

/// A total table `source × target → [0, ∞]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GRel {
    source: Carrier,
    target: Carrier,
    values: Vec<ExtReal>,
}

impl GRel {
    pub fn from_fn<F>(source: Carrier, target: Carrier, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> ExtReal,
    {
        let mut values = Vec::with_capacity(source.len() * target.len());
        for i in source.indices() {
            for j in target.indices() {
                values.push(f(i, j));
            }
        }
        GRel { source, target, values }
    }

    pub fn from_rows(source: Carrier, target: Carrier, rows: Vec<Vec<ExtReal>>) -> Result<Self, Error> {
        if rows.len() != source.len() {
            return Err(Error::Shape(format!(
                "expected {} rows, got {}",
                source.len(),
                rows.len()
            )));
        }
        let mut values = Vec::with_capacity(source.len() * target.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != target.len() {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    target.len()
                )));
            }
            values.extend(row);
        }
        Ok(GRel { source, target, values })
    }

    pub fn square_from_rows(carrier: Carrier, rows: Vec<Vec<ExtReal>>) -> Result<Self, Error> {
        GRel::from_rows(carrier.clone(), carrier, rows)
    }

    /// The constant table.
    pub fn constant(source: Carrier, target: Carrier, value: ExtReal) -> Self {
        GRel::from_fn(source, target, |_, _| value.clone())
    }

    pub fn zero_rel(carrier: Carrier) -> Self {
        GRel::constant(carrier.clone(), carrier, ExtReal::zero())
    }

    pub fn infinity_rel(carrier: Carrier) -> Self {
        GRel::constant(carrier.clone(), carrier, ExtReal::infinity())
    }

    /// The characteristic table of equality.
    pub fn identity(carrier: Carrier) -> Self {
        GRel::from_fn(carrier.clone(), carrier, |i, j| {
            if i == j {
                ExtReal::zero()
            } else {
                ExtReal::infinity()
            }
        })
    }

    /// Characteristic table of a boolean relation.
    pub fn characteristic<F>(source: Carrier, target: Carrier, mut related: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        GRel::from_fn(source, target, |i, j| {
            if related(i, j) {
                ExtReal::zero()
            } else {
                ExtReal::infinity()
            }
        })
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    pub fn require_square(&self) -> Result<&Carrier, Error> {
        if self.is_square() {
            Ok(&self.source)
        } else {
            Err(Error::NotSquare(format!("{} × {}", self.source, self.target)))
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &ExtReal {
        &self.values[i * self.target.len() + j]
    }

    pub fn at_labels(&self, x: &str, y: &str) -> Result<&ExtReal, Error> {
        Ok(self.at(self.source.index_of(x)?, self.target.index_of(y)?))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &ExtReal)> {
        let m = self.target.len();
        self.values.iter().enumerate().map(move |(k, v)| (k / m, k % m, v))
    }

    /// Row `i` as a unary function on the target.
    pub fn row(&self, i: usize) -> UnaryFn {
        UnaryFn {
            carrier: self.target.clone(),
            values: self.target.indices().map(|j| self.at(i, j).clone()).collect(),
        }
    }

    /// Column `j` as a unary function on the source.
    pub fn col(&self, j: usize) -> UnaryFn {
        UnaryFn {
            carrier: self.source.clone(),
            values: self.source.indices().map(|i| self.at(i, j).clone()).collect(),
        }
    }

    /// Min-plus composition: `(d∘e)(x,y) = inf_z (d(x,z) + e(z,y))`.
    pub fn compose(&self, other: &GRel) -> Result<GRel, Error> {
        if self.target != other.source {
            return Err(Error::CarrierMismatch(format!(
                "compose: middle carriers differ: {} vs {}",
                self.target, other.source
            )));
        }
        let mid = self.target.len();
        Ok(GRel::from_fn(self.source.clone(), other.target.clone(), |i, j| {
            ExtReal::inf((0..mid).map(|z| self.at(i, z) + other.at(z, j)))
        }))
    }

    /// The involution: transpose of the table.
    pub fn opposite(&self) -> GRel {
        GRel::from_fn(self.target.clone(), self.source.clone(), |i, j| self.at(j, i).clone())
    }

    /// Pointwise maximum (lattice meet of the corresponding "relations").
    pub fn join(&self, other: &GRel) -> Result<GRel, Error> {
        self.require_same_shape(other, "join")?;
        Ok(GRel::from_fn(self.source.clone(), self.target.clone(), |i, j| {
            self.at(i, j).clone().max(other.at(i, j).clone())
        }))
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &GRel) -> Result<GRel, Error> {
        self.require_same_shape(other, "meet")?;
        Ok(GRel::from_fn(self.source.clone(), self.target.clone(), |i, j| {
            self.at(i, j).clone().min(other.at(i, j).clone())
        }))
    }

    /// `d ∨ d^op`, the symmetrization of a square table.
    pub fn symmetrize(&self) -> Result<GRel, Error> {
        self.require_square()?;
        self.join(&self.opposite())
    }

    /// Right Kan extension `d/e` for tables with a common target:
    /// `(d/e)(x,y) = sup_z (d(x,z) - e(y,z))₊`.
    pub fn kan_right(&self, other: &GRel) -> Result<GRel, Error> {
        if self.target != other.target {
            return Err(Error::CarrierMismatch(format!(
                "kan_right: targets differ: {} vs {}",
                self.target, other.target
            )));
        }
        let mid = self.target.len();
        Ok(GRel::from_fn(self.source.clone(), other.source.clone(), |i, j| {
            ExtReal::sup(
                (0..mid)
                    .map(|z| self.at(i, z).truncated_sub(other.at(j, z))),
            )
        }))
    }

    /// Left Kan lift `e\d` for tables with a common source:
    /// `(e\d)(x,y) = sup_z (d(z,y) - e(z,x))₊` where `e = self`, `d = other`.
    pub fn kan_left(&self, other: &GRel) -> Result<GRel, Error> {
        if self.source != other.source {
            return Err(Error::CarrierMismatch(format!(
                "kan_left: sources differ: {} vs {}",
                self.source, other.source
            )));
        }
        let mid = self.source.len();
        Ok(GRel::from_fn(self.target.clone(), other.target.clone(), |i, j| {
            ExtReal::sup(
                (0..mid)
                    .map(|z| other.at(z, j).truncated_sub(self.at(z, i))),
            )
        }))
    }

    /// The characteristic table of the zero-relation `x ≤ᵈ y ⟺ d(x,y) = 0`
    /// (equivalently: the table scaled by `∞`).
    pub fn zero_relation(&self) -> GRel {
        GRel::from_fn(self.source.clone(), self.target.clone(), |i, j| {
            self.at(i, j).times_infinity()
        })
    }

    /// Pointwise `≤` on tables of identical shape.
    pub fn leq(&self, other: &GRel) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// First cell where `self ≤ other` fails.
    pub fn leq_witness(&self, other: &GRel) -> Option<(usize, usize)> {
        self.cells().find(|(i, j, v)| *v > other.at(*i, *j)).map(|(i, j, _)| (i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.opposite()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.is_square() && self.source.indices().all(|i| self.at(i, i).is_zero())
    }

    /// `Vd`: the sup-application of a subset of the source,
    /// `y ↦ sup_{v∈V} d(v,y)`, with `sup ∅ = 0`.
    pub fn set_sup(&self, v: &Subset) -> UnaryFn {
        UnaryFn {
            carrier: self.target.clone(),
            values: self
                .target
                .indices()
                .map(|j| ExtReal::sup(v.iter().map(|i| self.at(i, j))))
                .collect(),
        }
    }

    /// `dW`: the inf-application of a subset of the target,
    /// `x ↦ inf_{w∈W} d(x,w)`, with `inf ∅ = ∞`.
    pub fn set_inf(&self, w: &Subset) -> UnaryFn {
        UnaryFn {
            carrier: self.source.clone(),
            values: self
                .source
                .indices()
                .map(|i| ExtReal::inf(w.iter().map(|j| self.at(i, j))))
                .collect(),
        }
    }

    /// Scalar `(Vd)W = inf_{w∈W} sup_{v∈V} d(v,w)`.
    pub fn sup_inf(&self, v: &Subset, w: &Subset) -> ExtReal {
        let vd = self.set_sup(v);
        ExtReal::inf(w.iter().map(|j| &vd.values[j]))
    }

    /// Scalar `V(dW) = sup_{v∈V} inf_{w∈W} d(v,w)`.
    pub fn inf_sup(&self, v: &Subset, w: &Subset) -> ExtReal {
        let dw = self.set_inf(w);
        ExtReal::sup(v.iter().map(|i| &dw.values[i]))
    }

    /// Restriction of a square table to a subset of its carrier.
    pub fn restrict(&self, keep: &Subset) -> Result<GRel, Error> {
        self.require_square()?;
        let labels: Vec<String> = keep.labels(&self.source);
        let carrier = Carrier::new(labels)?;
        let idx: Vec<usize> = keep.iter().collect();
        Ok(GRel::from_fn(carrier.clone(), carrier, |i, j| self.at(idx[i], idx[j]).clone()))
    }

    /// Composition restricted through a subset:
    /// `(d ∘ Y ∘ e)(x,z) = inf_{y∈Y} (d(x,y) + e(y,z))`.
    pub fn compose_through(&self, through: &Subset, other: &GRel) -> Result<GRel, Error> {
        if self.target != other.source {
            return Err(Error::CarrierMismatch("compose_through: middle carriers differ".into()));
        }
        Ok(GRel::from_fn(self.source.clone(), other.target.clone(), |i, j| {
            ExtReal::inf(
                through
                    .iter()
                    .map(|y| self.at(i, y) + other.at(y, j)),
            )
        }))
    }

    fn require_same_shape(&self, other: &GRel, op: &str) -> Result<(), Error> {
        if self.source != other.source || self.target != other.target {
            Err(Error::CarrierMismatch(format!("{op}: carrier mismatch")))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .values
            .iter()
            .map(|v| v.to_string().len())
            .chain(self.source.labels().iter().map(|l| l.len()))
            .chain(self.target.labels().iter().map(|l| l.len()))
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$} |", "")?;
        for j in self.target.indices() {
            write!(f, " {:>width$}", self.target.label(j))?;
        }
        writeln!(f)?;
        for i in self.source.indices() {
            write!(f, "{:>width$} |", self.source.label(i))?;
            for j in self.target.indices() {
                write!(f, " {:>width$}", self.at(i, j).to_string())?;
            }
            if i + 1 < self.source.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// A total function `carrier → [0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryFn {
    carrier: Carrier,
    values: Vec<ExtReal>,
}

impl UnaryFn {
    pub fn new(carrier: Carrier, values: Vec<ExtReal>) -> Result<Self, Error> {
        if values.len() != carrier.len() {
            return Err(Error::Shape("unary function length mismatch".into()));
        }
        Ok(UnaryFn { carrier, values })
    }

    pub fn from_fn<F: FnMut(usize) -> ExtReal>(carrier: Carrier, f: F) -> Self {
        let values = carrier.indices().map(f).collect();
        UnaryFn { carrier, values }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn at(&self, i: usize) -> &ExtReal {
        &self.values[i]
    }

    pub fn values(&self) -> &[ExtReal] {
        &self.values
    }

    pub fn zero_set(&self) -> Subset {
        Subset::from_indices(self.carrier.indices().filter(|&i| self.values[i].is_zero()))
    }

    pub fn leq(&self, other: &UnaryFn) -> bool {
        self.carrier == other.carrier && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// The uniform preorder `f ≾ g`. On a finite carrier this is exactly
    /// zero-set inclusion: `{x : g(x) = 0} ⊆ {x : f(x) = 0}`.
    pub fn uniformly_below(&self, other: &UnaryFn) -> Result<bool, Error> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch("uniformly_below: carrier mismatch".into()));
        }
        Ok(other.zero_set().is_subset_of(&self.zero_set()))
    }
}

/// The uniform preorder between two equally-shaped tables, read as unary
/// functions on the product: zero-set inclusion cell-wise.
pub fn uniformly_below_rel(f: &GRel, g: &GRel) -> Result<bool, Error> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::CarrierMismatch("uniformly_below_rel: shape mismatch".into()));
    }
    Ok(g.cells().all(|(i, j, v)| !v.is_zero() || f.at(i, j).is_zero()))
}
