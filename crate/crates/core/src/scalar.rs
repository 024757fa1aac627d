//! Field scalar abstraction. Everything algebraic in this crate is
//! scalar-generic; the shipped instantiation is exact rational arithmetic
//! (see [`crate::Rat`]), and f64 works for quick experiments.

use std::ops::{Div, Mul, Sub};

use num_traits::{One, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}
