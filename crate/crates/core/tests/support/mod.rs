pub mod oracle;
pub mod cap_suite;
pub mod suites;
