pub mod matrix3;
pub mod proof;
pub mod search;
pub mod semantics;
pub mod syntax;
pub mod translate;
