//! Versioned binary model persistence (`.olid` files).
//!
//! Layout, all little-endian:
//!   magic "OLID" | version u8 |
//!   ngram_order u32 | hash_bits u32 | hash_seed u32 |
//!   nu f64 | tol f64 | max_passes u64 |
//!   rho f64 | n_train u64 | sv_count u64 | converged u8 |
//!   nnz u64 | nnz * (index u32, weight f64) |
//!   sha256 of everything above
//!
//! Weights are stored sparse (most of the space is untouched by
//! desk-scale corpora) and densified on load, so a round trip reproduces
//! every decision value bit for bit.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::features::HashConfig;
use crate::svm::{OneClassModel, TrainConfig};

const MAGIC: &[u8; 4] = b"OLID";
const VERSION: u8 = 1;
const CHECKSUM_LEN: usize = 32;

pub fn save_model(model: &OneClassModel, path: &Path) -> Result<(), Error> {
    let cfg = &model.config;
    let mut buf = Vec::with_capacity(128 + model.w.len() / 16);
    buf.extend_from_slice(MAGIC);
    buf.push(VERSION);
    buf.extend_from_slice(&(cfg.ngram_order as u32).to_le_bytes());
    buf.extend_from_slice(&cfg.hash.hash_bits.to_le_bytes());
    buf.extend_from_slice(&cfg.hash.seed.to_le_bytes());
    buf.extend_from_slice(&cfg.nu.to_le_bytes());
    buf.extend_from_slice(&cfg.tol.to_le_bytes());
    buf.extend_from_slice(&cfg.max_passes.to_le_bytes());
    buf.extend_from_slice(&model.rho.to_le_bytes());
    buf.extend_from_slice(&(model.n_train as u64).to_le_bytes());
    buf.extend_from_slice(&(model.sv_count as u64).to_le_bytes());
    buf.push(u8::from(model.converged));

    let nnz = model.w.iter().filter(|&&v| v != 0.0).count() as u64;
    buf.extend_from_slice(&nnz.to_le_bytes());
    for (i, &v) in model.w.iter().enumerate() {
        if v != 0.0 {
            buf.extend_from_slice(&(i as u32).to_le_bytes());
            buf.extend_from_slice(&v.to_le_bytes());
        }
    }

    let digest = Sha256::digest(&buf);
    buf.extend_from_slice(&digest);
    fs::write(path, buf)?;
    Ok(())
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Result<&'a [u8], Error> {
        let end = self.at.checked_add(len).filter(|&e| e <= self.bytes.len());
        let Some(end) = end else { return Err(Error::TruncatedFile) };
        let slice = &self.bytes[self.at..end];
        self.at = end;
        Ok(slice)
    }

    fn u8(&mut self) -> Result<u8, Error> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, Error> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, Error> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn f64(&mut self) -> Result<f64, Error> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

pub fn load_model(path: &Path) -> Result<OneClassModel, Error> {
    let bytes = fs::read(path)?;
    if bytes.len() < MAGIC.len() + 1 + CHECKSUM_LEN {
        return Err(Error::TruncatedFile);
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::BadMagic);
    }
    let (payload, stored_sum) = bytes.split_at(bytes.len() - CHECKSUM_LEN);
    if Sha256::digest(payload).as_slice() != stored_sum {
        return Err(Error::ChecksumMismatch);
    }

    let mut r = Reader { bytes: payload, at: 4 };
    let version = r.u8()?;
    if version != VERSION {
        return Err(Error::VersionMismatch { found: version, supported: VERSION });
    }
    let ngram_order = r.u32()? as usize;
    let hash_bits = r.u32()?;
    let seed = r.u32()?;
    let nu = r.f64()?;
    let tol = r.f64()?;
    let max_passes = r.u64()?;
    let rho = r.f64()?;
    let n_train = r.u64()? as usize;
    let sv_count = r.u64()? as usize;
    let converged = match r.u8()? {
        0 => false,
        1 => true,
        other => return Err(Error::CorruptModel(format!("converged flag {other}"))),
    };

    let config = TrainConfig {
        nu,
        tol,
        max_passes,
        ngram_order,
        hash: HashConfig { hash_bits, seed },
    };
    config
        .validate()
        .map_err(|e| Error::CorruptModel(format!("stored config invalid: {e}")))?;

    let dim = config.hash.dim();
    let nnz = r.u64()?;
    let mut w = vec![0.0; dim];
    for _ in 0..nnz {
        let index = r.u32()? as usize;
        let value = r.f64()?;
        if index >= dim {
            return Err(Error::CorruptModel(format!("weight index {index} beyond {dim}")));
        }
        w[index] = value;
    }
    if r.at != payload.len() {
        return Err(Error::CorruptModel("trailing bytes after weights".into()));
    }

    Ok(OneClassModel { w, rho, config, n_train, sv_count, converged })
}
