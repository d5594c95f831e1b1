//! Finite categories and 2-categories, their maps, and a fixture catalog.

pub mod catalog;
mod category;
mod functor;
mod pseudo;
pub mod search;
mod two_category;

pub use category::{Arrow, FinCategory, Functor};
pub use functor::TwoFunctor;
pub use pseudo::PseudoFunctor;
pub use search::{count_2functors, enumerate_2functors, for_each_2functor, iso_2categories};
pub use two_category::{build_fin_2category, Cell, Fin2Category, RawCell, RawTables, ThinBuilder};

pub(crate) use category::{invert_bijection, is_bijection};
pub(crate) use functor::same;
pub(crate) use two_category::uniquify;
