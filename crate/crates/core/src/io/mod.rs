//! Text and JSON formats, and drawings.

pub mod json;
pub mod parse;
pub mod render;

pub use json::*;
pub use parse::{format_linform, format_poly, format_product, parse_linform, parse_poly};
pub use render::{render, RenderFormat};
