"""Shared test configuration.

Points the descent-table cache at a throwaway directory so test runs
never read or write the user's real cache, while still letting tables
persist across tests within one run.
"""

import os
import tempfile

os.environ["NSYMPEAK_CACHE_DIR"] = tempfile.mkdtemp(prefix="nsympeak-test-cache-")
