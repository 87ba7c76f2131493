import logging
import time

import requests

from ..config.settings import get_config
from ..exceptions import FetchError

logger = logging.getLogger(__name__)


class OeisAPI:
    def __init__(self, config=None, endpoint=None):
        self.config = config or get_config()
        self.endpoint = endpoint or self.config.OEIS_URL
        self.headers = {"accept": "text/plain"}

    def bfile_url(self, sequence_id: str) -> str:
        try:
            return self.endpoint.format(sequence_id=sequence_id, number=sequence_id.lstrip("Aa"))
        except (KeyError, IndexError, ValueError) as e:
            raise FetchError(f"Bad b-file URL template {self.endpoint!r}: only {{sequence_id}} and {{number}} are filled in", retryable=False) from e

    def fetch_bfile(self, sequence_id: str) -> str:
        """Download a raw b-file. One retry after a backoff; nothing is written to disk here."""
        url = self.bfile_url(sequence_id)

        try:
            return self._download(url, sequence_id)
        except FetchError as e:
            if not e.retryable:
                raise
            logger.warning(f"[{sequence_id}] fetch failed, retrying once in {self.config.OEIS_RETRY_BACKOFF}s: {e}")

        time.sleep(self.config.OEIS_RETRY_BACKOFF)
        return self._download(url, sequence_id)

    def _download(self, url: str, sequence_id: str) -> str:
        cap = self.config.OEIS_MAX_BYTES
        logger.info(f"[{sequence_id}] fetching b-file from {url}")

        try:
            with requests.get(url, headers=self.headers, timeout=self.config.OEIS_TIMEOUT, stream=True) as response:
                response.raise_for_status()

                declared = response.headers.get("content-length")
                if declared and declared.isdigit() and int(declared) > cap:
                    raise _oversized(sequence_id, int(declared), cap)

                chunks = []
                received = 0
                for chunk in response.iter_content(chunk_size=65536):
                    received += len(chunk)
                    if received > cap:
                        raise _oversized(sequence_id, received, cap)
                    chunks.append(chunk)

        except requests.exceptions.RequestException as e:
            logger.error(f"[{sequence_id}] failed to fetch b-file: {e}")
            raise FetchError(f"Failed to fetch {sequence_id} from {url}: {e}") from e

        try:
            text = b"".join(chunks).decode("utf-8")
        except UnicodeDecodeError as e:
            raise FetchError(f"{sequence_id} b-file is not UTF-8 text: {e}", retryable=False) from e

        logger.info(f"[{sequence_id}] received {received} bytes")
        return text


def _oversized(sequence_id, size, cap):
    return FetchError(f"{sequence_id} b-file exceeds the {cap}-byte limit (got at least {size} bytes)", retryable=False)


def fetch_bfile(sequence_id, endpoint=None, config=None):
    return OeisAPI(config=config, endpoint=endpoint).fetch_bfile(sequence_id)
