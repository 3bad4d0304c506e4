# SPDX-License-Identifier: MIT
"""Tests for hashing utilities."""

from scheffers_analytic.options import Config
from scheffers_analytic.util.hashing import compute_file_sha256, compute_sha256


class TestComputeSha256:
    """Tests for compute_sha256."""

    def test_known_digest(self):
        """Digest of the empty string."""
        assert compute_sha256(b"") == (
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        )

    def test_length(self):
        """Hash should be 64 hex chars."""
        assert len(compute_sha256(b"test")) == 64


class TestComputeFileSha256:
    """Tests for compute_file_sha256."""

    def test_consistent_with_bytes(self, tmp_path):
        """File hash should match content hash."""
        content = b"HSAS1 kind=grid" * 100_000
        path = tmp_path / "g.hsas"
        path.write_bytes(content)
        assert compute_file_sha256(path) == compute_sha256(content)


class TestConfigHash:
    """Tests for Config.config_hash."""

    def test_stable(self):
        """Equal settings hash equally."""
        assert Config().config_hash() == Config().config_hash()
        assert len(Config().config_hash()) == 16

    def test_sensitive_to_settings(self):
        """Changing a tolerance changes the hash."""
        assert Config(phase_epsilon=1e-6).config_hash() != Config().config_hash()

    def test_ignores_root(self, tmp_path):
        """The directory a config was read from is not a setting."""
        assert Config(root=tmp_path).config_hash() == Config().config_hash()
