from ncposet.utils.config import Config, load_config
from ncposet.utils.file_handler import emit, load_file, save_file
from ncposet.utils.logger import logger
from ncposet.utils.misc import parse_int_list
