//! Side-length and `(x, y, z)` coordinates for integer triangles.
//!
//! With semiperimeter `s`, the substitution `x = s - a`, `y = s - b`,
//! `z = s - c` turns Heron's formula into `A^2 = s*x*y*z` and the sides
//! back into `(x + y, x + z, y + z)`.

use std::fmt;

use crate::arith::{perfect_square_root, Nat};
use crate::error::{Error, Result};

/// A nondegenerate triangle as sorted positive side lengths `a <= b <= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl SideTriple {
    /// Sorts the sides and rejects zero or degenerate triples.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        let mut s = [a, b, c];
        s.sort_unstable();
        let [a, b, c] = s;
        if a == 0 {
            return Err(Error::ZeroSide(a, b, c));
        }
        // a + b > c, written so it cannot overflow
        if a <= c - b {
            return Err(Error::Degenerate(a, b, c));
        }
        Ok(SideTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn perimeter(&self) -> Result<u64> {
        self.a
            .checked_add(self.b)
            .and_then(|ab| ab.checked_add(self.c))
            .ok_or(Error::Overflow("perimeter"))
    }

    /// `p(p - 2a)(p - 2b)(p - 2c)`, which equals `16 A^2`.
    pub fn sixteen_area_squared(&self) -> Result<Nat> {
        let p = Nat::from(self.perimeter()?);
        // p - 2a = b + c - a etc.; all positive by the triangle inequality
        let (a, b, c) = (Nat::from(self.a), Nat::from(self.b), Nat::from(self.c));
        let fa = b.try_add(c)?.try_sub(a)?;
        let fb = a.try_add(c)?.try_sub(b)?;
        let fc = a.try_add(b)?.try_sub(c)?;
        Nat::try_product([p, fa, fb, fc])
    }
}

impl fmt::Display for SideTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The `(x, y, z)` parameters of an even-perimeter triangle, `x <= y <= z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XyzTriple {
    x: u64,
    y: u64,
    z: u64,
}

impl XyzTriple {
    /// Sorts the parameters ascending; every positive triple is a valid triangle.
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        let mut t = [x, y, z];
        t.sort_unstable();
        let [x, y, z] = t;
        if x == 0 {
            return Err(Error::ZeroParameter(x, y, z));
        }
        // sides and perimeter must stay in range
        x.checked_add(y)
            .and_then(|v| v.checked_add(z))
            .and_then(|s| s.checked_mul(2))
            .ok_or(Error::Overflow("xyz perimeter"))?;
        Ok(XyzTriple { x, y, z })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn semiperimeter(&self) -> u64 {
        self.x + self.y + self.z
    }

    pub fn perimeter(&self) -> u64 {
        2 * self.semiperimeter()
    }

    /// `x * y * z`.
    pub fn product(&self) -> Result<Nat> {
        Nat::try_product([self.x.into(), self.y.into(), self.z.into()])
    }
}

impl fmt::Display for XyzTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Sides `(x + y, x + z, y + z)`; the largest side `y + z` sits opposite the smallest `x`.
pub fn xyz_to_sides(t: XyzTriple) -> SideTriple {
    // x <= y <= z already gives the sorted order
    SideTriple {
        a: t.x + t.y,
        b: t.x + t.z,
        c: t.y + t.z,
    }
}

/// `(s - c, s - b, s - a)`; fails when the perimeter is odd.
pub fn sides_to_xyz(t: SideTriple) -> Result<XyzTriple> {
    let p = t.perimeter()?;
    if p % 2 == 1 {
        return Err(Error::OddPerimeter(p));
    }
    let s = p / 2;
    XyzTriple::new(s - t.c, s - t.b, s - t.a)
}

/// `s * x * y * z`, the squared area.
pub fn area_squared(t: XyzTriple) -> Result<Nat> {
    Nat::from(t.semiperimeter()).try_mul(t.product()?)
}

/// The integer area of `t`, or `None` when the area is irrational or not integral.
///
/// Works for any parity: `16 A^2` must be a square whose root is divisible by 4.
pub fn heron_area(t: SideTriple) -> Result<Option<u64>> {
    let sixteen_a2 = t.sixteen_area_squared()?;
    match perfect_square_root(sixteen_a2) {
        Some(root) if root.get() % 4 == 0 => Ok(Some(Nat::new(root.get() / 4).to_u64()?)),
        _ => Ok(None),
    }
}

/// A triangle with integer sides and integer area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeronTriangle {
    sides: SideTriple,
    perimeter: u64,
    semiperimeter: u64,
    area: u64,
}

impl HeronTriangle {
    /// `Ok(None)` when the triangle is not Heron.
    pub fn from_sides(sides: SideTriple) -> Result<Option<Self>> {
        let Some(area) = heron_area(sides)? else {
            return Ok(None);
        };
        let perimeter = sides.perimeter()?;
        if perimeter % 2 == 1 {
            return Err(Error::Inconsistent(format!(
                "Heron triangle {sides} has odd perimeter {perimeter}"
            )));
        }
        Ok(Some(HeronTriangle {
            sides,
            perimeter,
            semiperimeter: perimeter / 2,
            area,
        }))
    }

    pub fn from_xyz(t: XyzTriple) -> Result<Option<Self>> {
        Self::from_sides(xyz_to_sides(t))
    }

    pub fn sides(&self) -> SideTriple {
        self.sides
    }

    pub fn perimeter(&self) -> u64 {
        self.perimeter
    }

    pub fn semiperimeter(&self) -> u64 {
        self.semiperimeter
    }

    pub fn area(&self) -> u64 {
        self.area
    }

    pub fn xyz(&self) -> XyzTriple {
        sides_to_xyz(self.sides).expect("Heron triangles have even perimeter")
    }
}

impl PartialOrd for HeronTriangle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: perimeter, then sides lexicographically.
impl Ord for HeronTriangle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.perimeter, self.sides).cmp(&(other.perimeter, other.sides))
    }
}

impl fmt::Display for HeronTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} p={} A={}", self.sides, self.perimeter, self.area)
    }
}

pub fn is_equable(h: &HeronTriangle) -> bool {
    h.area == h.perimeter
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sides(a: u64, b: u64, c: u64) -> SideTriple {
        SideTriple::new(a, b, c).unwrap()
    }

    fn xyz(x: u64, y: u64, z: u64) -> XyzTriple {
        XyzTriple::new(x, y, z).unwrap()
    }

    fn heron(a: u64, b: u64, c: u64) -> HeronTriangle {
        HeronTriangle::from_sides(sides(a, b, c)).unwrap().unwrap()
    }

    #[test]
    fn side_triple_validation() {
        assert_eq!(sides(26, 3, 25).as_array(), [3, 25, 26]);
        assert_eq!(SideTriple::new(1, 2, 3), Err(Error::Degenerate(1, 2, 3)));
        assert_eq!(SideTriple::new(0, 2, 2), Err(Error::ZeroSide(0, 2, 2)));
        assert!(SideTriple::new(1, 1, u64::MAX).is_err());
        assert!(SideTriple::new(u64::MAX, u64::MAX, u64::MAX)
            .unwrap()
            .perimeter()
            .is_err());
    }

    #[test]
    fn xyz_to_sides_examples() {
        assert_eq!(xyz_to_sides(xyz(1, 2, 24)).as_array(), [3, 25, 26]);
        assert_eq!(xyz_to_sides(xyz(1, 1, 1)).as_array(), [2, 2, 2]);
        assert_eq!(xyz_to_sides(xyz(3, 6, 9)).as_array(), [9, 12, 15]);
        assert_eq!(xyz(3, 6, 9).perimeter(), 36);
    }

    #[test]
    fn sides_to_xyz_examples() {
        assert_eq!(sides_to_xyz(sides(3, 25, 26)).unwrap(), xyz(1, 2, 24));
        assert_eq!(sides_to_xyz(sides(2, 2, 2)).unwrap(), xyz(1, 1, 1));
        assert_eq!(sides_to_xyz(sides(2, 3, 4)), Err(Error::OddPerimeter(9)));
    }

    #[test]
    fn area_squared_examples() {
        assert_eq!(area_squared(xyz(1, 2, 24)).unwrap(), Nat::new(27 * 48));
        assert_eq!(area_squared(xyz(1, 2, 24)).unwrap(), Nat::new(1296));
        assert_eq!(area_squared(xyz(3, 6, 9)).unwrap(), Nat::new(2916));
        assert_eq!(area_squared(xyz(1, 2, 864)).unwrap(), Nat::new(867 * 1728));
        assert_eq!(area_squared(xyz(1, 2, 864)).unwrap(), Nat::new(1_498_176));
        let huge = XyzTriple::new(u64::MAX / 8, u64::MAX / 8, u64::MAX / 8).unwrap();
        assert_eq!(area_squared(huge), Err(Error::Overflow("mul")));
    }

    #[test]
    fn heron_area_examples() {
        assert_eq!(heron_area(sides(9, 12, 15)).unwrap(), Some(9 * 12 / 2));
        assert_eq!(heron_area(sides(2, 2, 2)).unwrap(), None);
        assert_eq!(heron_area(sides(3, 865, 866)).unwrap(), Some(1224));
        // 16A^2 = 15*3*5*7 is not square
        assert_eq!(heron_area(sides(4, 5, 6)).unwrap(), None);
    }

    #[test]
    fn sixteen_area_squared_side_form() {
        assert_eq!(
            sides(3, 4, 5).sixteen_area_squared().unwrap(),
            Nat::new(576)
        );
        assert_eq!(heron_area(sides(3, 4, 5)).unwrap(), Some(6));
    }

    #[test]
    fn equable_examples() {
        assert!(is_equable(&heron(5, 12, 13)));
        assert!(!is_equable(&heron(3, 4, 5)));
        assert!(is_equable(&heron(9, 10, 17)));
    }

    #[test]
    fn canonical_ordering() {
        let mut v = [
            heron(9, 12, 15),
            heron(5, 5, 6),
            heron(3, 4, 5),
            heron(5, 5, 8),
        ];
        v.sort();
        let got: Vec<[u64; 3]> = v.iter().map(|h| h.sides().as_array()).collect();
        assert_eq!(got, vec![[3, 4, 5], [5, 5, 6], [5, 5, 8], [9, 12, 15]]);
    }

    /// Rational Heron: A^2 = s(s-a)(s-b)(s-c) with s = p/2 held as numerator over 2.
    fn rational_area_is_integer(a: u64, b: u64, c: u64) -> bool {
        // A^2 * 16 = p(p-2a)(p-2b)(p-2c); A integer iff that is 16 * k^2.
        let p = (a + b + c) as u128;
        let prod = p * (p - 2 * a as u128) * (p - 2 * b as u128) * (p - 2 * c as u128);
        if !prod.is_multiple_of(16) {
            return false;
        }
        let q = prod / 16;
        let mut k = 0u128;
        while k * k < q {
            k += 1;
        }
        k * k == q
    }

    proptest! {
        #[test]
        fn xyz_round_trip(x in 1u64..100_000, y in 1u64..100_000, z in 1u64..100_000) {
            let t = xyz(x, y, z);
            prop_assert_eq!(sides_to_xyz(xyz_to_sides(t)).unwrap(), t);
            let u = xyz_to_sides(t);
            prop_assert_eq!(u.perimeter().unwrap(), 2 * t.semiperimeter());
            // largest side opposite smallest parameter
            prop_assert_eq!(u.c(), t.y() + t.z());
        }

        #[test]
        fn heron_forms_agree(a in 1u64..5000, b in 1u64..5000, c in 1u64..5000) {
            prop_assume!(SideTriple::new(a, b, c).is_ok());
            let u = sides(a, b, c);
            if u.perimeter().unwrap().is_multiple_of(2) {
                let t = sides_to_xyz(u).unwrap();
                prop_assert_eq!(xyz_to_sides(t), u);
                let sixteen = area_squared(t).unwrap().try_mul(Nat::new(16)).unwrap();
                prop_assert_eq!(sixteen, u.sixteen_area_squared().unwrap());
            }
        }

        #[test]
        fn heron_area_matches_rational_evaluation(a in 1u64..120, b in 1u64..120, c in 1u64..120) {
            prop_assume!(SideTriple::new(a, b, c).is_ok());
            let u = sides(a, b, c);
            prop_assert_eq!(
                heron_area(u).unwrap().is_some(),
                rational_area_is_integer(u.a(), u.b(), u.c())
            );
        }
    }
}
