//! Cartesian, funny and Gray tensor products of finite 2-categories.

pub mod funny;
pub mod gray;
pub mod product;
pub mod words;

pub use funny::{comparison_k_underlying, funny_full, funny_underlying, Funny, FunnyFull};
pub use gray::{gray_map, gray_tensor, gray_tensor_underlying, Gray, GrayCell};
pub use product::{product, Product};
pub use words::{concat, word_reduce, AlternatingWord, Factors, Letter, Side};
