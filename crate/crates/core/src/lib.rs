//! Text preprocessing that turns chat messages into speakable prose.

pub mod assets;
pub mod config;
pub mod emoji;
pub mod entity;
pub mod error;
pub mod lexical;
pub mod pipeline;
pub mod profanity;
pub mod punctuation;
pub mod segmentation;

pub use assets::{asset_footprint, load_assets, AssetBundle, EmojiRecord};
pub use config::{load_config, Config};
pub use error::{Error, Result};
pub use pipeline::{preprocess, preprocess_with_report, ProcessedMessage, StageTiming, MAX_GRAPHEMES};
