use std::io;
use std::process::ExitCode;
use std::thread;

fn main() -> ExitCode {
    // the tree dynamic program recurses once per tree level
    let code = thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(|| mscs_core::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr()))
        .expect("spawn solver thread")
        .join()
        .unwrap_or(101);
    ExitCode::from(code as u8)
}
