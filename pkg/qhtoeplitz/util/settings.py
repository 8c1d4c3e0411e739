# Standard Library
import configparser
import os

# qhtoeplitz Modules
from qhtoeplitz.util.log import logger


class SettingsIO:

    """ConfigParser abstraction."""

    def __init__(self, config_file):
        self.config_file = config_file
        self.config = configparser.ConfigParser()
        if os.path.exists(self.config_file):
            try:
                self.config.read([self.config_file])
            except configparser.ParsingError as ex:
                logger.error("Failed to read config file %s: %s", self.config_file, ex)
            except UnicodeDecodeError as ex:
                logger.error("Some invalid characters are preventing the setting file from loading properly: %s", ex)

    def read_setting(self, key, section="qhtoeplitz", default=""):
        """Read a setting from the config file

        Params:
            key (str): Setting key
            section (str): Optional section, default to 'qhtoeplitz'
            default (str): Default value to return if setting not present
        """
        try:
            return self.config.get(section, key)
        except (configparser.NoOptionError, configparser.NoSectionError):
            return default

    def read_float(self, key, default, section="qhtoeplitz"):
        """Read a numeric setting, falling back to `default` on bad values"""
        value = self.read_setting(key, section=section)
        if not value:
            return default
        try:
            return float(value)
        except ValueError:
            logger.warning("Invalid value for %s in %s: %s", key, self.config_file, value)
            return default

    def read_int(self, key, default, section="qhtoeplitz"):
        return int(self.read_float(key, default, section=section))

    def write_setting(self, key, value, section="qhtoeplitz"):
        if not self.config.has_section(section):
            self.config.add_section(section)
        self.config.set(section, key, str(value))

        config_dir = os.path.dirname(self.config_file)
        if config_dir and not os.path.isdir(config_dir):
            os.makedirs(config_dir)
        with open(self.config_file, "w") as config_file:
            self.config.write(config_file)
