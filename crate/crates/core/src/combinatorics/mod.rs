pub mod composition;
pub mod compact;
pub mod hooks;
pub mod kostka;
pub mod partition;
pub mod shape;
pub mod word;

pub use compact::parse_compact_word;
pub use composition::{coarsenings, enumerate_compositions, refinements, Composition, Family};
pub use hooks::{hook_decompositions, hooks_relative_to, lp, HookDecomposition, Join};
pub use kostka::{kostka, skew_kostka};
pub use partition::{partitions, Partition};
pub use shape::{semistandard_tableaux, SkewShape, Tableau};
pub use word::Word;
