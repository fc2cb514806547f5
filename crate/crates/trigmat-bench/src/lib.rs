// bench-only crate; see benches/trigmat_benches.rs
