//! Quadratic modules `M = (Me →H Mee →P Me)` and the quadratic tensor
//! product `A ⊗ᑫ M`.

mod oracle;
mod tensor;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, GroupHom};
use crate::int::Int;
use crate::matrix::IntMatrix;

pub use oracle::{brute_force_quad_tensor, DEFAULT_ORACLE_BOUND};
pub use tensor::{
    cross_effect, exterior_square, quad_tensor, quad_tensor_free, whitehead_gamma, FreeQuadTensor,
    QuadTensor,
};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModuleLiteral", into = "ModuleLiteral")]
pub struct QuadraticModule {
    me: FgAbGroup,
    mee: FgAbGroup,
    h: GroupHom,
    p: GroupHom,
}

/// `{"Me": G, "Mee": G, "H": matrix, "P": matrix}`
#[derive(Serialize, Deserialize)]
struct ModuleLiteral {
    #[serde(rename = "Me")]
    me: FgAbGroup,
    #[serde(rename = "Mee")]
    mee: FgAbGroup,
    #[serde(rename = "H")]
    h: IntMatrix,
    #[serde(rename = "P")]
    p: IntMatrix,
}

impl TryFrom<ModuleLiteral> for QuadraticModule {
    type Error = Error;
    fn try_from(l: ModuleLiteral) -> Result<Self> {
        let shape = |m: IntMatrix, rows: usize, cols: usize| {
            if m.rows() == 0 { IntMatrix::zeros(rows, cols) } else { m }
        };
        let h = shape(l.h, l.mee.ngens(), l.me.ngens());
        let p = shape(l.p, l.me.ngens(), l.mee.ngens());
        QuadraticModule::new(l.me, l.mee, h, p)
    }
}

impl From<QuadraticModule> for ModuleLiteral {
    fn from(m: QuadraticModule) -> Self {
        ModuleLiteral {
            h: m.h.matrix().clone(),
            p: m.p.matrix().clone(),
            me: m.me,
            mee: m.mee,
        }
    }
}

/// How generators of `A ⊗ᑫ M` are named.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Notation {
    Gamma,
    Lambda,
    Generic,
}

impl QuadraticModule {
    /// Checks `PHP = 2P` and `HPH = 2H` (and the well-definedness of both maps).
    pub fn new(me: FgAbGroup, mee: FgAbGroup, h: IntMatrix, p: IntMatrix) -> Result<Self> {
        let h = GroupHom::new(me.clone(), mee.clone(), h)
            .map_err(|e| Error::QuadraticAxiom(format!("H: {e}")))?;
        let p = GroupHom::new(mee.clone(), me.clone(), p)
            .map_err(|e| Error::QuadraticAxiom(format!("P: {e}")))?;
        let m = QuadraticModule { me, mee, h, p };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let two = Int::from(2);
        if self.p.compose(&self.h).compose(&self.p) != self.p.scale(&two) {
            return Err(Error::QuadraticAxiom("PHP ≠ 2P".into()));
        }
        if self.h.compose(&self.p).compose(&self.h) != self.h.scale(&two) {
            return Err(Error::QuadraticAxiom("HPH ≠ 2H".into()));
        }
        let t = self.involution();
        let id = GroupHom::identity(&self.mee);
        if t.compose(&t) != id || self.p.compose(&t) != self.p || t.compose(&self.h) != self.h {
            return Err(Error::QuadraticAxiom("involution T = HP − 1 misbehaves".into()));
        }
        Ok(())
    }

    pub fn me(&self) -> &FgAbGroup {
        &self.me
    }

    pub fn mee(&self) -> &FgAbGroup {
        &self.mee
    }

    pub fn h(&self) -> &GroupHom {
        &self.h
    }

    pub fn p(&self) -> &GroupHom {
        &self.p
    }

    /// `T = HP − 1` on `Mee`.
    pub fn involution(&self) -> GroupHom {
        self.h.compose(&self.p).sub(&GroupHom::identity(&self.mee))
    }

    /// `ℤ^Γ = (ℤ →1 ℤ →2 ℤ)`
    pub fn z_gamma() -> Self {
        let z = FgAbGroup::free(1);
        Self::new(z.clone(), z, IntMatrix::from_i64(&[&[1]]), IntMatrix::from_i64(&[&[2]]))
            .expect("ℤ^Γ is a quadratic module")
    }

    /// `ℤ^Λ = (0 → ℤ → 0)`
    pub fn z_lambda() -> Self {
        Self::new(
            FgAbGroup::trivial(),
            FgAbGroup::free(1),
            IntMatrix::zeros(1, 0),
            IntMatrix::zeros(0, 1),
        )
        .expect("ℤ^Λ is a quadratic module")
    }

    /// `π₅{S³} = (ℤ/2 →0 ℤ →0 ℤ/2)`, with `π₅S³` generated by `η²`.
    pub fn pi5_s3() -> Self {
        let me = FgAbGroup::cyclic(2).with_labels(vec!["η²"]).unwrap();
        Self::new(me, FgAbGroup::free(1), IntMatrix::from_i64(&[&[0]]), IntMatrix::from_i64(&[&[0]]))
            .expect("π₅{S³} is a quadratic module")
    }

    /// Names accepted in files and on the command line.
    pub const BUILTIN_NAMES: [&'static str; 5] = ["Z_Gamma", "Z_Lambda", "pi3S2", "pi5S3", "Q2S3"];

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "Z_Gamma" | "pi3S2" => Some(Self::z_gamma()),
            "Z_Lambda" | "Q2S3" => Some(Self::z_lambda()),
            "pi5S3" => Some(Self::pi5_s3()),
            _ => None,
        }
    }

    /// A builtin name or a JSON literal.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match Self::builtin(s) {
            Some(m) => Ok(m),
            None if s.starts_with('{') => Ok(serde_json::from_str(s)?),
            None => Err(Error::QuadraticAxiom(format!(
                "unknown quadratic module {s:?} (builtins: {})",
                Self::BUILTIN_NAMES.join(", ")
            ))),
        }
    }

    /// The builtin name of a module equal to one, if any.
    pub fn builtin_name(&self) -> Option<&'static str> {
        ["Z_Gamma", "Z_Lambda", "pi5S3"]
            .into_iter()
            .find(|n| Self::builtin(n).as_ref() == Some(self))
    }

    pub(crate) fn notation(&self) -> Notation {
        if *self == Self::z_gamma() {
            Notation::Gamma
        } else if *self == Self::z_lambda() {
            Notation::Lambda
        } else {
            Notation::Generic
        }
    }
}

impl fmt::Debug for QuadraticModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticModule({self})")
    }
}

impl fmt::Display for QuadraticModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} →H {} →P {}), H = {}, P = {}", self.me, self.mee, self.me, self.h.matrix(), self.p.matrix())
    }
}
