pub mod error;
pub mod euler_frame;
pub mod geom;
pub mod triangle;
pub mod locus;
pub mod polyid;
pub mod verify;
pub mod io;
