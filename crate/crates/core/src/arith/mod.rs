pub mod fixed;
pub mod integer;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod reconstruct;
pub mod roots;
pub mod sturm;
