use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Element, FgAbGroup};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;

/// Homomorphism given by an integer matrix whose column `j` is the image of
/// source generator `j` in target coordinates. Entries are kept reduced
/// modulo the target orders.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HomLiteral", into = "HomLiteral")]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

#[derive(Serialize, Deserialize)]
struct HomLiteral {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl TryFrom<HomLiteral> for GroupHom {
    type Error = Error;
    fn try_from(l: HomLiteral) -> Result<Self> {
        // An empty row list cannot carry its width.
        let matrix = if l.matrix.rows() == 0 {
            IntMatrix::zeros(0, l.source.ngens())
        } else {
            l.matrix
        };
        GroupHom::new(l.source, l.target, matrix)
    }
}

impl From<GroupHom> for HomLiteral {
    fn from(h: GroupHom) -> Self {
        HomLiteral { source: h.source, target: h.target, matrix: h.matrix }
    }
}

impl GroupHom {
    /// Validates shape and well-definedness: every source generator of order
    /// `d` must map to an element killed by `d`.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::InvalidHom(format!(
                "matrix is {}x{} but {} → {} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                source,
                target,
                target.ngens(),
                source.ngens()
            )));
        }
        for j in 0..source.ngens() {
            let d = source.order_of(j);
            if d.is_zero() {
                continue;
            }
            let img: Vec<Int> = matrix.column(j).iter().map(|x| x * &d).collect();
            if !target.is_zero_element(&img) {
                return Err(Error::InvalidHom(format!(
                    "generator {} of order {d} maps to {}, whose order does not divide {d}",
                    source.label(j),
                    target.format_element(&matrix.column(j))
                )));
            }
        }
        Ok(Self::new_reduced(source, target, matrix))
    }

    /// Constructor for matrices already known to be well defined.
    pub(crate) fn new_reduced(source: FgAbGroup, target: FgAbGroup, mut matrix: IntMatrix) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.ngens(), source.ngens()));
        for i in 0..target.ngens() {
            let d = target.order_of(i);
            if !d.is_zero() {
                for x in matrix.row_mut(i) {
                    *x = x.rem_euclid(&d);
                }
            }
        }
        GroupHom { source, target, matrix }
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::new_reduced(g.clone(), g.clone(), IntMatrix::identity(g.ngens()))
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self::new_reduced(
            source.clone(),
            target.clone(),
            IntMatrix::zeros(target.ngens(), source.ngens()),
        )
    }

    /// Multiplication by `c` on `g`.
    pub fn multiplication(g: &FgAbGroup, c: i64) -> Self {
        Self::new_reduced(g.clone(), g.clone(), IntMatrix::identity(g.ngens()).scale(&Int::from(c)))
    }

    /// The map sending generator `j` of `source` to `images[j]`.
    pub fn from_images(source: &FgAbGroup, target: &FgAbGroup, images: &[Element]) -> Result<Self> {
        if images.len() != source.ngens() || images.iter().any(|v| v.len() != target.ngens()) {
            return Err(Error::InvalidHom("image list does not match source/target".into()));
        }
        Self::new(source.clone(), target.clone(), IntMatrix::from_columns(images, target.ngens()))
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Same matrix, relabelled groups (must be equal decompositions).
    pub fn with_groups(&self, source: FgAbGroup, target: FgAbGroup) -> Self {
        assert!(source == self.source && target == self.target, "groups differ");
        GroupHom { source, target, matrix: self.matrix.clone() }
    }

    pub fn apply(&self, v: &[Int]) -> Element {
        let v = self.source.reduce(v);
        self.target.reduce(&self.matrix.mul_vec(&v))
    }

    pub fn image_of_generator(&self, j: usize) -> Element {
        self.matrix.column(j)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> GroupHom {
        assert!(inner.target == self.source, "composition of incompatible maps");
        Self::new_reduced(inner.source.clone(), self.target.clone(), self.matrix.mul(&inner.matrix))
    }

    pub fn add(&self, other: &GroupHom) -> GroupHom {
        assert!(self.source == other.source && self.target == other.target);
        Self::new_reduced(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &GroupHom) -> GroupHom {
        assert!(self.source == other.source && self.target == other.target);
        Self::new_reduced(self.source.clone(), self.target.clone(), self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &Int) -> GroupHom {
        Self::new_reduced(self.source.clone(), self.target.clone(), self.matrix.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        super::ops::kernel(self).0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        super::ops::cokernel(self).0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel(&self) -> (FgAbGroup, GroupHom) {
        super::ops::kernel(self)
    }

    pub fn image(&self) -> (FgAbGroup, GroupHom) {
        super::ops::image(self)
    }

    pub fn cokernel(&self) -> (FgAbGroup, GroupHom) {
        super::ops::cokernel(self)
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} → {}, {})", self.source, self.target, self.matrix)
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.source.ngens())
            .map(|j| {
                format!(
                    "{} ↦ {}",
                    self.source.label(j),
                    self.target.format_element(&self.matrix.column(j))
                )
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_definedness_is_checked() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        assert!(GroupHom::new(z2.clone(), z4.clone(), IntMatrix::from_i64(&[&[1]])).is_err());
        assert!(GroupHom::new(z2.clone(), z4.clone(), IntMatrix::from_i64(&[&[2]])).is_ok());
        assert!(GroupHom::new(z2.clone(), FgAbGroup::free(1), IntMatrix::from_i64(&[&[1]])).is_err());
        assert!(GroupHom::new(z2, z4, IntMatrix::from_i64(&[&[2, 0]])).is_err());
    }

    #[test]
    fn composition_reduces() {
        let z = FgAbGroup::free(1);
        let z4 = FgAbGroup::cyclic(4);
        let f = GroupHom::new(z.clone(), z4.clone(), IntMatrix::from_i64(&[&[3]])).unwrap();
        let g = GroupHom::multiplication(&z, 3);
        assert_eq!(f.compose(&g).matrix(), &IntMatrix::from_i64(&[&[1]]));
        assert_eq!(GroupHom::identity(&z4).compose(&f), f);
    }

    #[test]
    fn literal_round_trip() {
        let f = GroupHom::new(
            FgAbGroup::cyclic(12),
            FgAbGroup::cyclic(6),
            IntMatrix::from_i64(&[&[1]]),
        )
        .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"source":{"rank":0,"torsion":[12]},"target":{"rank":0,"torsion":[6]},"matrix":[[1]]}"#
        );
        assert_eq!(serde_json::from_str::<GroupHom>(&s).unwrap(), f);
        let to_trivial = r#"{"source":{"rank":1,"torsion":[]},"target":{"rank":0,"torsion":[]},"matrix":[]}"#;
        assert!(serde_json::from_str::<GroupHom>(to_trivial).unwrap().is_zero());
    }
}
