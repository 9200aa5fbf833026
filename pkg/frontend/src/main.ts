import { ApiClient } from "./api.js"
import { App } from "./app.js"

const root = document.getElementById("app")
if (root === null) throw new Error("missing #app root element")
const app = new App(root, new ApiClient())
void app.init().then(() => app.runBlendNow())
