pub mod coxeter;
pub mod kreweras;
pub mod partitions;
pub mod qlaurent;
pub mod springer_bc;
pub mod symbolic;
