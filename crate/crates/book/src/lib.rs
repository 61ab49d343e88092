//! Every chapter of `book/` as a module, so `cargo test --doc` runs its
//! listings against the current API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/magmas.md")]
pub mod magmas {}
#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("../../../book/src/snf.md")]
pub mod snf {}
#[doc = include_str!("../../../book/src/closed-forms.md")]
pub mod closed_forms {}
#[doc = include_str!("../../../book/src/orbits.md")]
pub mod orbits {}
#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
