use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::{Direction, Twist};
use crate::variant::Variant;

use super::element::{WeylAlgebra, WeylElement};
use super::{FreeExpr, WeylLetter};

/// A substitution of generator images, extended (anti)multiplicatively and
/// (anti)linearly to the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoSpec {
    variant: Variant,
    images: BTreeMap<WeylLetter, WeylElement>,
    direction: Direction,
    twist: Twist,
}

impl EndoSpec {
    /// A spec with no images yet.
    pub fn new(variant: Variant, direction: Direction, twist: Twist) -> Self {
        EndoSpec {
            variant,
            images: BTreeMap::new(),
            direction,
            twist,
        }
    }

    pub fn identity(v: Variant) -> Self {
        let mut s = Self::new(v, Direction::Multiplicative, Twist::Identity);
        for l in WeylLetter::all(&v) {
            s.images
                .insert(l, WeylElement::letter(v, l).expect("letter in range"));
        }
        s
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn images(&self) -> &BTreeMap<WeylLetter, WeylElement> {
        &self.images
    }

    pub fn set_image(&mut self, l: WeylLetter, image: WeylElement) -> Result<()> {
        l.validate(&self.variant)?;
        if image.variant() != self.variant {
            return Err(Error::VariantMismatch(
                self.variant.to_string(),
                image.variant().to_string(),
            ));
        }
        self.images.insert(l, image);
        Ok(())
    }

    /// Set the image of `m_i`; the image of `m_i^-1` becomes its inverse.
    pub fn set_m_image(&mut self, i: u32, image: WeylElement) -> Result<()> {
        let inv = image.unit_inverse()?;
        self.set_image(WeylLetter::M(i), image)?;
        self.set_image(WeylLetter::MInv(i), inv)
    }

    pub fn image(&self, l: WeylLetter) -> Result<&WeylElement> {
        self.images
            .get(&l)
            .ok_or_else(|| Error::MissingImage(l.to_string()))
    }

    /// Check that every letter of the variant has an image.
    pub fn validate(&self) -> Result<()> {
        for l in WeylLetter::all(&self.variant) {
            self.image(l)?;
        }
        Ok(())
    }

    /// Image of an element, mapping each canonical word letter by letter.
    pub fn apply(&self, elem: &WeylElement) -> Result<WeylElement> {
        if elem.variant() != self.variant {
            return Err(Error::VariantMismatch(
                self.variant.to_string(),
                elem.variant().to_string(),
            ));
        }
        let mut out = WeylElement::zero(self.variant);
        for (mono, c) in elem.terms() {
            let mut word = mono.word();
            if self.direction.is_anti() {
                word.reverse();
            }
            let mut acc = WeylElement::scalar(self.variant, self.twist.apply(c));
            for l in word {
                acc = acc.checked_mul(self.image(l)?)?;
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// Image of a free expression without reducing it first; this is the
    /// form needed to check that relations are preserved.
    pub fn apply_expr(&self, expr: &FreeExpr) -> Result<WeylElement> {
        expr.eval(
            &WeylAlgebra(self.variant),
            &|l: &WeylLetter| {
                l.validate(&self.variant)?;
                self.image(*l).cloned()
            },
            self.direction,
            self.twist,
        )
    }

    /// `outer ∘ inner`, computed as images of images.
    pub fn compose(outer: &EndoSpec, inner: &EndoSpec) -> Result<EndoSpec> {
        if outer.variant != inner.variant {
            return Err(Error::VariantMismatch(
                outer.variant.to_string(),
                inner.variant.to_string(),
            ));
        }
        let mut images = BTreeMap::new();
        for (l, img) in &inner.images {
            images.insert(*l, outer.apply(img)?);
        }
        Ok(EndoSpec {
            variant: outer.variant,
            images,
            direction: outer.direction.compose(inner.direction),
            twist: outer.twist.compose(inner.twist),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QScalar;
    use WeylLetter::*;

    fn omega_like(v: Variant) -> EndoSpec {
        let mut s = EndoSpec::new(v, Direction::Antimultiplicative, Twist::Bar);
        for i in 1..=v.weyl_len() {
            s.set_image(X(i), WeylElement::letter(v, D(i)).unwrap())
                .unwrap();
            s.set_image(D(i), WeylElement::letter(v, X(i)).unwrap())
                .unwrap();
            s.set_m_image(i, WeylElement::letter(v, MInv(i)).unwrap())
                .unwrap();
        }
        s
    }

    #[test]
    fn identity_is_identity() {
        let v = Variant::jmath(2).unwrap();
        let e = WeylElement::word(v, &[X(1), D(2), M(3), D(3)]).unwrap();
        assert_eq!(EndoSpec::identity(v).apply(&e).unwrap(), e);
    }

    #[test]
    fn twist_applies_to_coefficients() {
        let v = Variant::imath(1).unwrap();
        let s = omega_like(v);
        let e = WeylElement::letter(v, X(1))
            .unwrap()
            .scale(&QScalar::qpow(1));
        let expected = WeylElement::letter(v, D(1))
            .unwrap()
            .scale(&QScalar::qpow(-1));
        assert_eq!(s.apply(&e).unwrap(), expected);
    }

    #[test]
    fn missing_image_is_reported() {
        let v = Variant::imath(1).unwrap();
        let s = EndoSpec::new(v, Direction::Multiplicative, Twist::Identity);
        let e = WeylElement::letter(v, X(1)).unwrap();
        assert_eq!(s.apply(&e), Err(Error::MissingImage("x1".into())));
        assert!(s.validate().is_err());
    }

    #[test]
    fn omega_squares_to_identity() {
        let v = Variant::jmath(2).unwrap();
        let s = omega_like(v);
        let sq = EndoSpec::compose(&s, &s).unwrap();
        assert_eq!(sq, EndoSpec::identity(v));
    }
}
