//! Dieudonné determinants over p-adic group rings and maximal orders, with
//! the Weierstrass machinery over O_D[[x]] and ideal checks in Λ/(p²).

pub mod algebras;
pub mod dieudonne;
pub mod error;
pub mod group_algebra;
pub mod iwasawa;
pub mod linalg;
pub mod padic;
pub mod random;
pub mod ring;
pub mod weierstrass;
pub mod worked;

pub use dieudonne::{det_class, ClassPart, DetClass, DetEntry, IntegralityCertificate, Verdict};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use padic::{PAdic, Valuation};
pub use ring::{Ring, Scalar};
