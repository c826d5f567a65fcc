//! Bicomplex numbers: pairs of complex numbers `z1 + j z2` with a second
//! imaginary unit `j` satisfying `j^2 = -1` and `ij = ji`.
//!
//! The algebra is commutative and contains zero divisors. Every element has
//! a unique idempotent representation `z = p+ z+ + p- z-` with
//! `p± = (1 ± ji)/2`, under which multiplication acts componentwise. The
//! cartesian pair `(z1, z2)` is stored as ground truth; the idempotent view
//! is an exact linear change of coordinates computed on demand.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

/// A bicomplex number `z1 + j z2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl Bicomplex {
    pub const ZERO: Self = Self {
        z1: Complex64::new(0.0, 0.0),
        z2: Complex64::new(0.0, 0.0),
    };
    pub const ONE: Self = Self {
        z1: Complex64::new(1.0, 0.0),
        z2: Complex64::new(0.0, 0.0),
    };
    /// The second imaginary unit `j`.
    pub const J: Self = Self {
        z1: Complex64::new(0.0, 0.0),
        z2: Complex64::new(1.0, 0.0),
    };
    /// Idempotent `p+ = (1 + ji)/2`, i.e. `(1/2, i/2)` in cartesian form.
    pub const P_PLUS: Self = Self {
        z1: Complex64::new(0.5, 0.0),
        z2: Complex64::new(0.0, 0.5),
    };
    /// Idempotent `p- = (1 - ji)/2`.
    pub const P_MINUS: Self = Self {
        z1: Complex64::new(0.5, 0.0),
        z2: Complex64::new(0.0, -0.5),
    };

    /// Default absolute tolerance for the zero-divisor predicate.
    pub const ZERO_DIVISOR_TOL: f64 = 1e-14;

    pub fn new(z1: Complex64, z2: Complex64) -> Self {
        Self { z1, z2 }
    }

    /// Embeds a complex number as `z + j·0`.
    pub fn from_complex(z: Complex64) -> Self {
        Self {
            z1: z,
            z2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// Idempotent components `(z+, z-)` with `z± = z1 ∓ i z2`.
    pub fn to_idempotent(self) -> (Complex64, Complex64) {
        let i = Complex64::new(0.0, 1.0);
        (self.z1 - i * self.z2, self.z1 + i * self.z2)
    }

    /// Reconstructs the cartesian pair from idempotent components:
    /// `z1 = (z+ + z-)/2`, `z2 = i (z+ - z-)/2`.
    pub fn from_idempotent(z_plus: Complex64, z_minus: Complex64) -> Self {
        let i = Complex64::new(0.0, 1.0);
        Self {
            z1: 0.5 * (z_plus + z_minus),
            z2: 0.5 * i * (z_plus - z_minus),
        }
    }

    pub fn plus(self) -> Complex64 {
        self.to_idempotent().0
    }

    pub fn minus(self) -> Complex64 {
        self.to_idempotent().1
    }

    /// The bicomplex norm `sqrt((|z+|^2 + |z-|^2)/2)`.
    ///
    /// Vanishes iff `z = 0`; not multiplicative in general.
    pub fn bnorm(self) -> f64 {
        let (p, m) = self.to_idempotent();
        (0.5 * (p.norm_sqr() + m.norm_sqr())).sqrt()
    }

    /// True when exactly one idempotent component vanishes (within `tol`),
    /// i.e. the number is a nonzero zero divisor such as `p±`.
    pub fn is_zero_divisor(self, tol: f64) -> bool {
        let (p, m) = self.to_idempotent();
        (p.norm() <= tol) ^ (m.norm() <= tol)
    }

    pub fn scale(self, s: f64) -> Self {
        Self {
            z1: self.z1 * s,
            z2: self.z2 * s,
        }
    }

    /// Multiplies both cartesian components by a complex scalar (the action
    /// of the subfield `C(i)` on the algebra).
    pub fn scale_complex(self, s: Complex64) -> Self {
        Self {
            z1: self.z1 * s,
            z2: self.z2 * s,
        }
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            z1: self.z1 + rhs.z1,
            z2: self.z2 + rhs.z2,
        }
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, rhs: Self) {
        self.z1 += rhs.z1;
        self.z2 += rhs.z2;
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            z1: self.z1 - rhs.z1,
            z2: self.z2 - rhs.z2,
        }
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, rhs: Self) {
        self.z1 -= rhs.z1;
        self.z2 -= rhs.z2;
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            z1: -self.z1,
            z2: -self.z2,
        }
    }
}

impl Mul for Bicomplex {
    type Output = Self;
    /// `(z1 + j z2)(w1 + j w2) = z1 w1 - z2 w2 + j (z1 w2 + z2 w1)`.
    fn mul(self, rhs: Self) -> Self {
        Self {
            z1: self.z1 * rhs.z1 - self.z2 * rhs.z2,
            z2: self.z1 * rhs.z2 + self.z2 * rhs.z1,
        }
    }
}

// Wire format: the 4-tuple [Re z1, Im z1, Re z2, Im z2].
impl Serialize for Bicomplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(4)?;
        t.serialize_element(&self.z1.re)?;
        t.serialize_element(&self.z1.im)?;
        t.serialize_element(&self.z2.re)?;
        t.serialize_element(&self.z2.im)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Bicomplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TupleVisitor;
        impl<'de> Visitor<'de> for TupleVisitor {
            type Value = Bicomplex;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a 4-tuple [re_z1, im_z1, re_z2, im_z2]")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Bicomplex, A::Error> {
                let mut next = |idx: usize| -> std::result::Result<f64, A::Error> {
                    seq.next_element()?
                        .ok_or_else(|| de::Error::invalid_length(idx, &self))
                };
                let re1 = next(0)?;
                let im1 = next(1)?;
                let re2 = next(2)?;
                let im2 = next(3)?;
                Ok(Bicomplex::new(
                    Complex64::new(re1, im1),
                    Complex64::new(re2, im2),
                ))
            }
        }
        deserializer.deserialize_tuple(4, TupleVisitor)
    }
}

impl std::fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        write!(f, "({}) + j({})", self.z1, self.z2)
    }
}
