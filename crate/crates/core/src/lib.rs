pub mod arith;
pub mod census;
pub mod cli;
pub mod code;
pub mod cyclo;
pub mod error;
pub mod factor;
pub mod gf;
pub mod oracle;
pub mod poly;
pub mod ring;
mod text;
