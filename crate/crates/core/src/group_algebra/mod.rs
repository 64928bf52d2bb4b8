pub mod group;
pub mod group_ring;
pub mod series;
pub mod wedderburn;

pub use group::{FiniteGroup, Group, GroupKind};
pub use group_ring::{group_for_prime, padic_group_elem, GroupRingElem};
pub use series::{lambda_embed, IwasawaSeries, LambdaGElem};
pub use wedderburn::{dihedral_preimage, is_integral_member, wedderburn_project, WedderburnImage};
