//! Command-line front end for the ideal-family workbench. The real
//! dispatcher lands here; this stub keeps the workspace building.

/// Entry point shared by the binary and the integration tests.
pub fn cli_dispatch(_args: &[String]) -> u8 {
    2
}
