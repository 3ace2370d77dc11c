//! The ordered orthonormal frame (X, Y, Z, W) and vectors expressed in it.
//!
//! `span{X, Y}` is the horizontal distribution and `span{Z, W}` the vertical
//! one. Because the frame is orthonormal, the metric is the coordinate dot
//! product.

use core::fmt;
use core::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::scalar::Scalar;

/// A frame index. The numeric order X=0, Y=1, Z=2, W=3 is global.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frame {
    X = 0,
    Y = 1,
    Z = 2,
    W = 3,
}

impl Frame {
    pub const ALL: [Frame; 4] = [Frame::X, Frame::Y, Frame::Z, Frame::W];
    pub const HORIZONTAL: [Frame; 2] = [Frame::X, Frame::Y];
    pub const VERTICAL: [Frame; 2] = [Frame::Z, Frame::W];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Frame> {
        Self::ALL.get(i).copied()
    }

    pub fn from_char(c: char) -> Option<Frame> {
        match c {
            'X' => Some(Frame::X),
            'Y' => Some(Frame::Y),
            'Z' => Some(Frame::Z),
            'W' => Some(Frame::W),
            _ => None,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Frame::X => 'X',
            Frame::Y => 'Y',
            Frame::Z => 'Z',
            Frame::W => 'W',
        }
    }

    pub const fn is_horizontal(self) -> bool {
        matches!(self, Frame::X | Frame::Y)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Coordinates of a vector with respect to (X, Y, Z, W).
#[derive(Clone, Debug, PartialEq)]
pub struct FrameVector<S> {
    coords: [S; 4],
}

impl<S: Scalar> FrameVector<S> {
    pub fn new(x: S, y: S, z: S, w: S) -> Self {
        Self { coords: [x, y, z, w] }
    }

    pub fn from_coords(coords: [S; 4]) -> Self {
        Self { coords }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    /// The frame vector `e`.
    pub fn basis(e: Frame) -> Self {
        let mut v = Self::zero();
        v.coords[e.index()] = S::one();
        v
    }

    pub fn coords(&self) -> &[S; 4] {
        &self.coords
    }

    pub fn into_coords(self) -> [S; 4] {
        self.coords
    }

    pub fn x(&self) -> &S {
        &self.coords[0]
    }

    pub fn y(&self) -> &S {
        &self.coords[1]
    }

    pub fn z(&self) -> &S {
        &self.coords[2]
    }

    pub fn w(&self) -> &S {
        &self.coords[3]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_coords(self.coords.clone().map(|c| c * s.clone()))
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: &S, other: &Self) -> Self {
        let mut out = self.clone();
        for (o, c) in out.coords.iter_mut().zip(&other.coords) {
            *o = o.clone() + s.clone() * c.clone();
        }
        out
    }

    /// Sum over the frame of `coeff(e) * f(e)`; expands a linear map from its
    /// values on the basis.
    pub fn expand<F>(&self, mut f: F) -> Self
    where
        F: FnMut(Frame) -> Self,
    {
        Frame::ALL.iter().fold(Self::zero(), |acc, &e| {
            let c = &self.coords[e.index()];
            if c.is_zero() {
                acc
            } else {
                acc.add_scaled(c, &f(e))
            }
        })
    }

    /// The inner product of the frame metric.
    pub fn inner(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Projection onto `span{X, Y}`.
    pub fn horizontal(&self) -> Self {
        Self::new(self.coords[0].clone(), self.coords[1].clone(), S::zero(), S::zero())
    }

    /// Projection onto `span{Z, W}`.
    pub fn vertical(&self) -> Self {
        Self::new(S::zero(), S::zero(), self.coords[2].clone(), self.coords[3].clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FrameVector<T> {
        FrameVector::from_coords([f(&self.coords[0]), f(&self.coords[1]), f(&self.coords[2]), f(&self.coords[3])])
    }
}

pub fn inner<S: Scalar>(u: &FrameVector<S>, v: &FrameVector<S>) -> S {
    u.inner(v)
}

pub fn project_horizontal<S: Scalar>(v: &FrameVector<S>) -> FrameVector<S> {
    v.horizontal()
}

pub fn project_vertical<S: Scalar>(v: &FrameVector<S>) -> FrameVector<S> {
    v.vertical()
}

impl<S> Index<Frame> for FrameVector<S> {
    type Output = S;
    fn index(&self, e: Frame) -> &S {
        &self.coords[e as usize]
    }
}

impl<S> IndexMut<Frame> for FrameVector<S> {
    fn index_mut(&mut self, e: Frame) -> &mut S {
        &mut self.coords[e as usize]
    }
}

impl<S: Scalar> Add for FrameVector<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<S: Scalar> Add for &FrameVector<S> {
    type Output = FrameVector<S>;
    fn add(self, rhs: Self) -> FrameVector<S> {
        let mut out = self.clone();
        for (o, c) in out.coords.iter_mut().zip(&rhs.coords) {
            *o = o.clone() + c.clone();
        }
        out
    }
}

impl<S: Scalar> Sub for FrameVector<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<S: Scalar> Sub for &FrameVector<S> {
    type Output = FrameVector<S>;
    fn sub(self, rhs: Self) -> FrameVector<S> {
        let mut out = self.clone();
        for (o, c) in out.coords.iter_mut().zip(&rhs.coords) {
            *o = o.clone() - c.clone();
        }
        out
    }
}

impl<S: Scalar> Neg for FrameVector<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_coords(self.coords.map(|c| -c))
    }
}

impl<S: Scalar> Neg for &FrameVector<S> {
    type Output = FrameVector<S>;
    fn neg(self) -> FrameVector<S> {
        -self.clone()
    }
}

impl<S: Scalar> fmt::Display for FrameVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for e in Frame::ALL {
            let c = &self[e];
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            if *c == S::one() {
                write!(f, "{e}")?;
            } else if *c == -S::one() {
                write!(f, "-{e}")?;
            } else {
                write!(f, "({c}){e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
