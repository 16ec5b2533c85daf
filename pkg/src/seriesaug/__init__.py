"""Fast, reproducible augmentation for batches of univariate time series.

Fifteen augmentation operators (time-domain, spectral, warping) behind
one contract, DCT/FFT transforms with verified reconstruction, DTW
similarity, and probabilistic pipelines whose parallel, serial,
standard and per-sample executions are all bitwise identical.
"""

from .basic import (
    Crop,
    Drift,
    GaussianNoise,
    InjectNoise,
    Jitter,
    PermuteSegments,
    Quantize,
    Repeat,
    Resize,
    Reverse,
    Rotate,
    Scale,
    SlopeTrendNoise,
    SpikeNoise,
    UniformNoise,
)
from .bench import (
    BenchReport,
    TimingRecord,
    bench_augmenter,
    bench_pipeline,
    default_chain,
    environment_note,
    make_report,
    measure_peak_memory,
    power_law_exponent,
    report_csv,
    report_json,
    synthetic_batch,
)
from .core import (
    AUGMENTER_REGISTRY,
    Augmenter,
    Batch,
    SeedContext,
    derive_stream,
    worker_count,
)
from .datafiles import (
    FORMATS,
    DatasetFile,
    format_dataset,
    parse_dataset,
    read_dataset,
    write_dataset,
)
from .dtw import DtwResult, dtw_distance, dtw_similarity, mean_similarity
from .errors import (
    InvalidConfigError,
    InvalidInputError,
    InvalidParameterError,
    SeriesAugError,
    UnsupportedPlatformError,
)
from .freqaugment import AmplitudePhasePerturb, FrequencyMask
from .freqtransform import (
    DctBatch,
    SpectrumBatch,
    dct_forward,
    dct_inverse,
    fft_forward,
    fft_inverse,
    roundtrip_check,
)
from .pipeline import Mode, Pipeline, parse_mode, stage_from_dict, stage_to_dict
from .warp import TimeWarp, WindowWarp

__version__ = "0.1.0"

__all__ = [
    "AUGMENTER_REGISTRY",
    "Augmenter",
    "Batch",
    "SeedContext",
    "derive_stream",
    "worker_count",
    "Jitter",
    "Scale",
    "Rotate",
    "PermuteSegments",
    "Crop",
    "Reverse",
    "Resize",
    "Quantize",
    "Drift",
    "InjectNoise",
    "UniformNoise",
    "GaussianNoise",
    "SpikeNoise",
    "SlopeTrendNoise",
    "Repeat",
    "AmplitudePhasePerturb",
    "FrequencyMask",
    "TimeWarp",
    "WindowWarp",
    "DctBatch",
    "SpectrumBatch",
    "dct_forward",
    "dct_inverse",
    "fft_forward",
    "fft_inverse",
    "roundtrip_check",
    "DtwResult",
    "dtw_distance",
    "dtw_similarity",
    "mean_similarity",
    "Mode",
    "Pipeline",
    "parse_mode",
    "stage_from_dict",
    "stage_to_dict",
    "BenchReport",
    "TimingRecord",
    "bench_augmenter",
    "bench_pipeline",
    "default_chain",
    "environment_note",
    "make_report",
    "measure_peak_memory",
    "power_law_exponent",
    "report_csv",
    "report_json",
    "synthetic_batch",
    "FORMATS",
    "DatasetFile",
    "format_dataset",
    "parse_dataset",
    "read_dataset",
    "write_dataset",
    "SeriesAugError",
    "InvalidParameterError",
    "InvalidInputError",
    "InvalidConfigError",
    "UnsupportedPlatformError",
]
