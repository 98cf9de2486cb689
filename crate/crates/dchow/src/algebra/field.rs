//! Arithmetic in the prime field F_p.

/// An element of F_p, kept fully reduced.  The modulus travels with the value
/// so that elements from different fields can never be combined silently.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

impl FieldElement {
    pub fn new(value: i64, modulus: u32) -> Self {
        debug_assert!(is_prime(modulus), "modulus {modulus} is not prime");
        let p = modulus as i64;
        let v = ((value % p) + p) % p;
        FieldElement {
            value: v as u32,
            modulus,
        }
    }

    pub fn zero(modulus: u32) -> Self {
        FieldElement { value: 0, modulus }
    }

    pub fn one(modulus: u32) -> Self {
        FieldElement::new(1, modulus)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) {
        assert_eq!(
            self.modulus, other.modulus,
            "field elements with different moduli"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check(other);
        let s = self.value as u64 + other.value as u64;
        FieldElement {
            value: (s % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check(other);
        let p = self.modulus as u64;
        let s = self.value as u64 + p - other.value as u64;
        FieldElement {
            value: (s % p) as u32,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> FieldElement {
        if self.value == 0 {
            *self
        } else {
            FieldElement {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check(other);
        let s = self.value as u64 * other.value as u64;
        FieldElement {
            value: (s % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = FieldElement::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; the modulus is prime, so every nonzero element
    /// has one.  Panics on zero.
    pub fn inv(&self) -> FieldElement {
        assert!(self.value != 0, "inverse of zero");
        self.pow(self.modulus as u64 - 2)
    }
}

/// Trial-division primality check, adequate for moduli up to 2^31.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_exist_for_all_nonzero_elements() {
        for p in [2u32, 3, 5, 7, 31] {
            for v in 1..p {
                let x = FieldElement::new(v as i64, p);
                assert_eq!(x.mul(&x.inv()).value(), 1);
            }
        }
    }

    #[test]
    fn negative_values_reduce_into_range() {
        let x = FieldElement::new(-1, 3);
        assert_eq!(x.value(), 2);
        assert_eq!(x.add(&FieldElement::one(3)).value(), 0);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
    }
}
