#[cfg(feature = "runner")]
pub mod claims;
pub mod dot;
pub mod io;
