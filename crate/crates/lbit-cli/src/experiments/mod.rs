pub mod bell;
pub mod defined;
pub mod ghz;
pub mod niven;
pub mod powcmd;
pub mod precession;
pub mod sg;
pub mod verifycmd;
