pub mod cyclotomic;
pub mod dihedral;
pub mod hurwitz;
pub mod quaternion;

pub use cyclotomic::Cyclo;
pub use dihedral::{nrd_principal_unit_preimage, nrd_unit_preimage_dihedral, DihedralElem};
pub use hurwitz::Hurwitz;
pub use quaternion::{Gaussian, Quaternion};
