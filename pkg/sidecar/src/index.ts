import { configFromEnv } from "./config";
import { createServer } from "./server";

const config = configFromEnv();
const app = createServer(config);

app.listen(config.port, config.host, () => {
  // eslint-disable-next-line no-console
  console.log(
    `candle sidecar listening on http://${config.host}:${config.port} ` +
      `(max_batch=${config.maxBatch}, summarizer=${config.models.summarizer})`,
  );
});
